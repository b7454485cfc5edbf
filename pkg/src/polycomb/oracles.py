"""Slow, independent reference computations used to cross-check the fast paths."""

from fractions import Fraction
from itertools import combinations, product


def det_cofactor(m):
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j]:
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            total += (-1) ** j * m[0][j] * det_cofactor(minor)
    return total


def clique_number_exhaustive(n, edges):
    adj = {frozenset(e) for e in edges}
    for k in range(n, 0, -1):
        for sub in combinations(range(n), k):
            if all(frozenset(p) in adj for p in combinations(sub, 2)):
                return k
    return 0


def gale_facet_count(d, n):
    """Facets of the cyclic d-polytope with n vertices via Gale's evenness condition."""
    count = 0
    for s in combinations(range(n), d):
        ss = set(s)
        ok = True
        for i, j in combinations([v for v in range(n) if v not in ss], 2):
            if sum(1 for v in s if i < v < j) % 2:
                ok = False
                break
        if ok:
            count += 1
    return count


def _solve(rows, rhs):
    """Unique solution of a square rational system, or None if singular."""
    n = len(rows)
    a = [[Fraction(v) for v in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return None
        a[c], a[piv] = a[piv], a[c]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [a[i][n] / a[i][i] for i in range(n)]


def in_hull_caratheodory(p, others):
    """Whether p is a convex combination of ``others``, by trying every small subset."""
    d = len(p)
    for k in range(1, min(d + 1, len(others)) + 1):
        for sub in combinations(others, k):
            # solve k of the d+1 equations, then verify the remaining ones
            rows = [[q[i] for q in sub] for i in range(d)] + [[1] * k]
            rhs = list(p) + [1]
            for pick in combinations(range(d + 1), k):
                lam = _solve([rows[i] for i in pick], [rhs[i] for i in pick])
                if lam is None or any(x < 0 for x in lam):
                    continue
                if all(sum(r[j] * lam[j] for j in range(k)) == b for r, b in zip(rows, rhs)):
                    return True
    return False


def rc_exhaustive(bits):
    """Rectangle covering number by trying every family of 1-rectangles (tiny matrices)."""
    r, c = len(bits), len(bits[0]) if bits else 0
    ones = {(i, j) for i in range(r) for j in range(c) if bits[i][j]}
    if not ones:
        return 0
    rects = []
    for rows in product((0, 1), repeat=r):
        I = [i for i in range(r) if rows[i]]
        if not I:
            continue
        for cols in product((0, 1), repeat=c):
            J = [j for j in range(c) if cols[j]]
            if J and all(bits[i][j] for i in I for j in J):
                rects.append(frozenset((i, j) for i in I for j in J))
    for k in range(1, len(ones) + 1):
        for fam in combinations(rects, k):
            if frozenset().union(*fam) == ones:
                return k
    return len(ones)


def fooling_exhaustive(bits):
    ones = [(i, j) for i, row in enumerate(bits) for j, v in enumerate(row) if v]

    def incompatible(p, q):
        return not bits[p[0]][q[1]] or not bits[q[0]][p[1]]

    for k in range(len(ones), 0, -1):
        for sub in combinations(ones, k):
            if all(incompatible(p, q) for p, q in combinations(sub, 2)):
                return k
    return 0
