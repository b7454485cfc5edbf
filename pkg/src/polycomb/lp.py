"""Exact phase-one simplex over the rationals."""

from fractions import Fraction
from typing import Optional, Sequence


def feasible_point(A: Sequence[Sequence[int]], b: Sequence[int]) -> Optional[list]:
    """Return some x >= 0 with A x = b, or None if there is none.

    Phase one of the tableau simplex method with artificial variables, using
    Bland's smallest-index rule for both the entering and the leaving
    variable so it cannot cycle. All arithmetic is in ``Fraction``.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    rows = []
    for i in range(m):
        row = [Fraction(v) for v in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
        row += [Fraction(int(k == i)) for k in range(m)]
        row.append(rhs)
        rows.append(row)
    basis = [n + i for i in range(m)]
    width = n + m

    # reduced costs of the phase-one objective sum(artificials)
    cost = [Fraction(0)] * (width + 1)
    for row in rows:
        for j in range(n):
            cost[j] -= row[j]
        cost[width] -= row[width]

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        leave, best = None, None
        for i, row in enumerate(rows):
            if row[enter] > 0:
                ratio = row[width] / row[enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:
            # unbounded phase-one objective is impossible (it is bounded below by 0)
            raise AssertionError("phase one is unbounded")
        piv_row = rows[leave]
        p = piv_row[enter]
        piv_row[:] = [v / p for v in piv_row]
        for i, row in enumerate(rows):
            if i != leave and row[enter] != 0:
                f = row[enter]
                row[:] = [v - f * w for v, w in zip(row, piv_row)]
        f = cost[enter]
        cost[:] = [v - f * w for v, w in zip(cost, piv_row)]
        basis[leave] = enter

    if cost[width] != 0:
        return None
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = rows[i][width]
    return x


def convex_combination(point: Sequence[int], others: Sequence[Sequence[int]]) -> Optional[list]:
    """Coefficients writing ``point`` as a convex combination of ``others``, or None."""
    if not others:
        return None
    d = len(point)
    A = [[q[k] for q in others] for k in range(d)]
    A.append([1] * len(others))
    return feasible_point(A, list(point) + [1])
