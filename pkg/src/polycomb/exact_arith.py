"""Exact integer linear algebra and integer polynomials.

Python ``int`` is the unbounded integer and ``fractions.Fraction`` the reduced
rational; everything here works on those directly. Matrices are sequences of
rows.
"""

from dataclasses import dataclass
from itertools import product
from typing import Sequence

IntMatrix = Sequence[Sequence[int]]

DET_SUM_CAP = 12


class DimensionError(ValueError):
    pass


class ResourceError(RuntimeError):
    """A configured size cap was exceeded."""


def _check_square(m: IntMatrix) -> int:
    n = len(m)
    for row in m:
        if len(row) != n:
            raise DimensionError(f"matrix is not square: {n} rows, row of length {len(row)}")
    return n


def det(m: IntMatrix) -> int:
    """Determinant by fraction-free Bareiss elimination.

    Every intermediate value is an integer (each division is exact), so the
    entries grow at most like the minors of ``m``.
    """
    n = _check_square(m)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def rank(m: IntMatrix) -> int:
    """Row rank of an integer matrix (fraction-free elimination)."""
    a = [list(map(int, row)) for row in m]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    r = 0
    prev = 1
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, rows):
            aic = a[i][c]
            for j in range(c, cols):
                a[i][j] = (a[i][j] * p - aic * a[r][j]) // prev
        prev = p
        r += 1
        if r == rows:
            break
    return r


def affine_rank(points: Sequence[Sequence[int]]) -> int:
    """Dimension of the affine hull of ``points`` (-1 for no points)."""
    if not points:
        return -1
    base = points[0]
    diffs = [[x - b for x, b in zip(p, base)] for p in points[1:]]
    return rank(diffs) if diffs else 0


def det_sum_decomposition_check(a: IntMatrix, b: IntMatrix, cap: int = DET_SUM_CAP) -> bool:
    """Check det(a + b) == sum over row selections S of det(D^S).

    D^S takes row i from ``a`` when i is in S and from ``b`` otherwise.
    """
    n = _check_square(a)
    if _check_square(b) != n:
        raise DimensionError(f"size mismatch: {n} vs {len(b)}")
    if n > cap:
        raise ResourceError(f"2^{n} terms exceeds cap 2^{cap}")
    total = sum(
        det([a[i] if pick else b[i] for i, pick in enumerate(sel)])
        for sel in product((False, True), repeat=n)
    )
    summed = [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]
    return det(summed) == total


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial; ``coeffs[i]`` multiplies ``t**i``."""

    coeffs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return -1

    def __call__(self, t: int) -> int:
        return poly_eval(self, t)


def poly_eval(p: IntPoly, t: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * t + c
    return acc


def poly_derivative(p: IntPoly, k: int = 1) -> IntPoly:
    """k-th derivative, with falling-factorial multipliers kept as integers."""
    if k < 0:
        raise ValueError("derivative order must be nonnegative")
    if k == 0:
        return p
    out = []
    for i in range(k, len(p.coeffs)):
        mult = 1
        for j in range(i - k + 1, i + 1):
            mult *= j
        out.append(p.coeffs[i] * mult)
    return IntPoly(tuple(out))
