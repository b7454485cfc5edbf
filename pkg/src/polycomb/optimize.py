"""Linear optimisation over explicit and cyclic point sets."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exact_arith import DimensionError, IntPoly, ResourceError, poly_derivative, poly_eval
from .pointset import (
    GSpec,
    PerturbParams,
    PointSet,
    clique_objective,
    cyclic_perturb,
    gen_bqp,
    minimal_k_exponent,
    moment_vector,
    round_perturbed_value,
)
from .structures import Graph

BQP_N_CAP = 12

NONNEG = "nonneg"
NONPOS = "nonpos"


@dataclass(frozen=True)
class SignSegment:
    """Indices lo..hi (1-based, inclusive) where a derivative has a weak sign."""

    lo: int
    hi: int
    sign: str


@dataclass(frozen=True)
class OptimizationResult:
    value: int
    argmax: tuple
    evaluations: int
    witness_t: Optional[int] = None
    segments: tuple = ()


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def brute_max(x_set: PointSet, c: Sequence[int]) -> OptimizationResult:
    """Maximum of c.x by scanning every point; argmax lists all maximisers."""
    if len(c) != x_set.dim:
        raise DimensionError(f"objective has length {len(c)}, expected {x_set.dim}")
    if not len(x_set):
        raise ValueError("empty point set")
    values = [_dot(c, x) for x in x_set]
    best = max(values)
    argmax = tuple(i for i, v in enumerate(values) if v == best)
    return OptimizationResult(best, argmax, len(values))


def _split(fk, g, seg, counter):
    """Split ``seg`` (where fk is monotone) into pieces of constant weak sign of fk.

    ``seg.sign`` is the sign of the next-higher derivative, i.e. the direction
    of fk. Binary search finds the last index on which fk is strictly on the
    "wrong" side (negative while increasing, positive while decreasing).
    """
    increasing = seg.sign == NONNEG

    def before_crossing(j):
        counter[0] += 1
        v = poly_eval(fk, g(j))
        return v < 0 if increasing else v > 0

    left, right = seg.lo - 1, seg.hi + 1
    while right - left > 1:
        mid = (left + right) // 2
        if before_crossing(mid):
            left = mid
        else:
            right = mid
    first, second = (NONPOS, NONNEG) if increasing else (NONNEG, NONPOS)
    out = []
    if left >= seg.lo:
        out.append(SignSegment(seg.lo, left, first))
    if left < seg.hi:
        out.append(SignSegment(left + 1, seg.hi, second))
    return out


def cyclic_max(d: int, n_points: int, g: GSpec, c: Sequence[int]) -> OptimizationResult:
    """Maximise c.x over the cyclic set C(d, N, g) without enumerating it.

    The objective is f(t) = c_1 t + ... + c_d t^d. Starting from the constant
    top derivative, each level splits the current segments where the next
    lower derivative changes sign (it is monotone on each of them), so after
    the first derivative f is monotone on every segment and the maximum sits
    at a segment end. Ties go to the smallest t. ``argmax`` holds 0-based
    indices into ``gen_cyclic(d, N, g)``.
    """
    if len(c) != d:
        raise DimensionError(f"objective has length {len(c)}, expected {d}")
    if n_points < 1:
        raise ValueError("n_points must be >= 1")
    f = IntPoly((0,) + tuple(c))
    top = f.degree
    if top < 1:
        return OptimizationResult(0, tuple(range(n_points)), 1, g(1),
                                  (SignSegment(1, n_points, NONNEG),))

    counter = [0]
    sign = NONNEG if f.coeffs[top] > 0 else NONPOS
    segments = [SignSegment(1, n_points, sign)]
    for k in range(top - 1, 0, -1):
        fk = poly_derivative(f, k)
        segments = [piece for seg in segments for piece in _split(fk, g, seg, counter)]

    best, best_i = None, None
    hits = []
    for seg in segments:
        for i in sorted({seg.lo, seg.hi}):
            counter[0] += 1
            v = poly_eval(f, g(i))
            hits.append((v, i))
            if best is None or v > best:
                best, best_i = v, i
    argmax = tuple(sorted(i - 1 for v, i in hits if v == best))
    return OptimizationResult(best, argmax, counter[0], g(best_i), tuple(segments))


def is_in_cone(x_set: PointSet, idx: int, c: Sequence[int]) -> bool:
    """True iff point ``idx`` maximises c over the set."""
    if len(c) != x_set.dim:
        raise DimensionError(f"objective has length {len(c)}, expected {x_set.dim}")
    v = _dot(c, x_set[idx])
    return all(v >= _dot(c, y) for y in x_set)


def perturbation_deviation(x: Sequence[int], c: Sequence[int], params: PerturbParams) -> Fraction:
    """|c.x - c.y / K| for y the perturbed image of the 0/1 point x; equals |c.M(x)| / K."""
    K = params.K
    y = [K * xi + mi for xi, mi in zip(x, moment_vector(x))]
    return abs(Fraction(_dot(c, x)) - Fraction(_dot(c, y), K))


def _rounding_exponent(x_set, c):
    """Smallest k with 2 * max |c.M(x)| < 2^k, so rounding recovers c.x."""
    worst = max(abs(_dot(c, moment_vector(x))) for x in x_set)
    return (2 * worst).bit_length()


def solve_clique_via_bqp(g: Graph, use_perturbation: bool = False,
                         params: Optional[PerturbParams] = None, cap: int = BQP_N_CAP) -> int:
    """Clique number of g as max c(G).x over BQP_n, optionally over its cyclic perturbation.

    With perturbation the optimum over the perturbed points is divided by K
    and rounded. The default K is the smallest power of two that is valid for
    the perturbation and keeps every deviation below 1/2.
    """
    if g.n > cap:
        raise ResourceError(f"{g.n} vertices exceeds BQP cap {cap}")
    if g.n == 0:
        return 0
    c = clique_objective(g)
    x_set = gen_bqp(g.n)
    if not use_perturbation:
        return brute_max(x_set, c).value
    need = _rounding_exponent(x_set, c)
    if params is None:
        d = x_set.dim
        params = PerturbParams(d, max(minimal_k_exponent(d), need))
    elif params.k_exponent < need:
        raise ValueError(
            f"k_exponent={params.k_exponent} cannot recover the optimum by rounding; need >= {need}"
        )
    y_set = cyclic_perturb(x_set, params)
    return round_perturbed_value(brute_max(y_set, c).value, params)
