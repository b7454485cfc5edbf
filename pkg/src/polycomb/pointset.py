"""Problem instances: finite integer point sets and their generators."""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, factorial
from typing import Optional, Sequence

from .structures import Graph


@dataclass(frozen=True)
class PointSet:
    """Finite set of distinct integer points, stored in lexicographic order."""

    dim: int
    points: tuple = field(default=())

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError(f"dimension must be >= 1, got {self.dim}")
        pts = []
        for p in self.points:
            p = tuple(int(v) for v in p)
            if len(p) != self.dim:
                raise ValueError(f"point {p} does not have dimension {self.dim}")
            pts.append(p)
        pts.sort()
        for a, b in zip(pts, pts[1:]):
            if a == b:
                raise ValueError(f"duplicate point {a}")
        object.__setattr__(self, "points", tuple(pts))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def index(self, point) -> int:
        return self.points.index(tuple(point))


@dataclass(frozen=True)
class GSpec:
    """Strictly increasing sample map ``g(i) = a*i + b`` (identity: a=1, b=0)."""

    kind: str = "identity"
    a: int = 1
    b: int = 0

    def __post_init__(self):
        if self.kind == "identity":
            object.__setattr__(self, "a", 1)
            object.__setattr__(self, "b", 0)
        elif self.kind == "affine":
            if self.a < 1 or self.b < 0:
                raise ValueError(f"affine g needs a >= 1 and b >= 0, got a={self.a}, b={self.b}")
        else:
            raise ValueError(f"unknown g kind {self.kind!r}")

    def __call__(self, i: int) -> int:
        return self.a * i + self.b


def perturbation_det_bound(d: int) -> int:
    """(2^d - 1)^(d(d+1)/2), an upper bound on the moment determinants of 0/1 points."""
    return (2**d - 1) ** (d * (d + 1) // 2)


def minimal_k_exponent(d: int) -> int:
    """Smallest k with 2^k > perturbation_det_bound(d)."""
    return perturbation_det_bound(d).bit_length()


@dataclass(frozen=True)
class PerturbParams:
    d: int
    k_exponent: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"dimension must be >= 1, got {self.d}")
        if self.k_exponent < 1 or 2**self.k_exponent <= perturbation_det_bound(self.d):
            raise ValueError(
                f"k_exponent={self.k_exponent} too small for d={self.d}: "
                f"need 2^k > (2^d-1)^(d(d+1)/2), i.e. k >= {minimal_k_exponent(self.d)}"
            )

    @property
    def K(self) -> int:
        return 1 << self.k_exponent

    @classmethod
    def default(cls, d):
        return cls(d, d**3)

    @classmethod
    def minimal(cls, d):
        return cls(d, minimal_k_exponent(d))


def encoding_size(x_set: PointSet, c: Optional[Sequence[int]] = None) -> int:
    """Bit length of the largest absolute coordinate over X and c (at least 1)."""
    if c is not None and len(c) != x_set.dim:
        raise ValueError(f"objective has length {len(c)}, expected {x_set.dim}")
    vectors = list(x_set.points)
    if c is not None:
        vectors.append(tuple(c))
    if not vectors:
        raise ValueError("encoding size of an empty point set")
    m = max((abs(v) for vec in vectors for v in vec), default=0)
    return max(1, m.bit_length())


def gen_cyclic(d: int, n_points: int, g: GSpec = GSpec()) -> PointSet:
    """Moment-curve samples (t, t^2, ..., t^d) at t = g(1), ..., g(N)."""
    if d < 1 or n_points < 1:
        raise ValueError("need d >= 1 and n_points >= 1")
    pts = []
    for i in range(1, n_points + 1):
        t = g(i)
        pts.append(tuple(t**k for k in range(1, d + 1)))
    return PointSet(d, tuple(pts))


def _check_binary(x):
    for v in x:
        if v not in (0, 1):
            raise ValueError(f"non-binary coordinate {v!r} in {tuple(x)}")


def point_number(x: Sequence[int]) -> int:
    _check_binary(x)
    return sum(1 << i for i, v in enumerate(x) if v)


def moment_vector(x: Sequence[int]) -> tuple:
    n = point_number(x)
    return tuple(n**k for k in range(1, len(x) + 1))


def perturb_point(x: Sequence[int], K: int) -> tuple:
    return tuple(K * xi + mi for xi, mi in zip(x, moment_vector(x)))


def cyclic_perturb(x_set: PointSet, params: Optional[PerturbParams] = None) -> PointSet:
    """Map every 0/1 point x to K*x + M(x)."""
    if params is None:
        params = PerturbParams.default(x_set.dim)
    elif params.d != x_set.dim:
        raise ValueError(f"params for d={params.d} applied to a point set of dim {x_set.dim}")
    K = params.K
    return PointSet(x_set.dim, tuple(perturb_point(x, K) for x in x_set))


def round_perturbed_value(v: int, params: PerturbParams) -> int:
    """Nearest integer to v / K, ties toward zero."""
    K = params.K
    q, r = divmod(v, K)
    if 2 * r > K or (2 * r == K and q < 0):
        return q + 1
    return q


def bqp_coordinates(n: int) -> list:
    """Index pairs for BQP_n coordinates: diagonal (i, i) first, then (i, j), i < j."""
    return [(i, i) for i in range(n)] + list(combinations(range(n), 2))


def gen_bqp(n: int) -> PointSet:
    """All 2^n vertices of the boolean quadric polytope, x_ij = x_ii * x_jj."""
    if n < 1:
        raise ValueError("n must be >= 1")
    coords = bqp_coordinates(n)
    pts = []
    for mask in range(1 << n):
        diag = [(mask >> i) & 1 for i in range(n)]
        pts.append(tuple(diag[i] * diag[j] for i, j in coords))
    return PointSet(len(coords), tuple(pts))


def clique_objective(g: Graph) -> tuple:
    """Objective whose maximum over BQP_n is the clique number of g."""
    out = []
    for i, j in bqp_coordinates(g.n):
        if i == j:
            out.append(1)
        elif g.has_edge(i, j):
            out.append(0)
        else:
            out.append(-2)
    return tuple(out)


def simplex_extension_scale(d: int) -> int:
    return d * factorial(d - 1)


def _simplex_extension_upper(d: int) -> list:
    """Vertices of the upper half (sum >= 1) as Fraction tuples, grouped by count of ones."""
    verts = []
    for k in range(1, d + 1):
        frac = Fraction(d - k, d - k + 1)
        for low in combinations(range(d), k - 1):
            verts.append(tuple(frac if i in low else Fraction(1) for i in range(d)))
    return verts


def gen_simplex_extension(d: int) -> PointSet:
    """Triangle-free extension of the (d-1)-simplex, scaled to integers.

    The upper half is cut from the unit cube by the cylinder over the simplex
    and the halfspace sum(x) >= 1; the lower half is its mirror image in the
    hyperplane sum(x) = 1. Coordinates are multiplied by d! so both halves
    are integral.
    """
    if d < 3:
        raise ValueError(f"simplex extension needs d >= 3, got {d}")
    L = simplex_extension_scale(d)
    pts = set()
    for x in _simplex_extension_upper(d):
        shift = 2 * (sum(x) - 1) / d
        for v in (x, tuple(xi - shift for xi in x)):
            scaled = tuple(vi * L for vi in v)
            assert all(s.denominator == 1 for s in scaled)
            pts.add(tuple(int(s) for s in scaled))
    assert len(pts) == 2 ** (d + 1) - 2 - d
    return PointSet(d, tuple(pts))


def simplex_extension_group_sizes(d: int) -> list:
    return [comb(d, k - 1) for k in range(1, d + 1)]
