"""Seeded oracle-equivalence suites behind ``polycomb selftest``."""

import random
from itertools import combinations, product

from . import oracles
from .combinatorics import clique_number, fooling_set_bound, rc_exact, rc_greedy
from .exact_arith import det, det_sum_decomposition_check
from .hull import facets, facets_bruteforce, is_simplicial, skeleton_graph
from .optimize import brute_max, cyclic_max
from .pointset import GSpec, PerturbParams, PointSet, cyclic_perturb, gen_cyclic
from .structures import BoolMatrix, Graph


def _cyclic(rng, count):
    for _ in range(count):
        d = rng.randint(1, 8)
        n = rng.randint(1, 512)
        g = GSpec() if rng.random() < 0.5 else GSpec("affine", rng.randint(1, 4), rng.randint(0, 9))
        c = [rng.randint(-n, n) for _ in range(d)]
        r, b = cyclic_max(d, n, g, c), brute_max(gen_cyclic(d, n, g), c)
        if r.value != b.value or r.argmax[0] != b.argmax[0]:
            return f"mismatch d={d} n={n} g={g} c={c}"
    return None


def _det(rng, count):
    for _ in range(count):
        n = rng.randint(1, 5)
        a = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        b = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        if det(a) != oracles.det_cofactor(a):
            return f"det mismatch on {a}"
        if not det_sum_decomposition_check(a, b):
            return f"decomposition fails on {a}, {b}"
    return None


def _facets(rng, count):
    cube = list(product((0, 1), repeat=3))
    for _ in range(count):
        k = rng.randint(4, 8)
        sub = rng.sample(cube, k)
        x = cyclic_perturb(PointSet(3, sub), PerturbParams.minimal(3))
        a, b = facets(x), facets_bruteforce(x)
        if a != b:
            return f"facet lists differ on {sub}"
        if not is_simplicial(a):
            return f"perturbed set {sub} not simplicial"
    for n in range(5, 9):
        if len(facets(gen_cyclic(4, n)).facets) != oracles.gale_facet_count(4, n):
            return f"cyclic facet count wrong for n={n}"
    return None


def _cliques(rng, count):
    for _ in range(count):
        n = rng.randint(1, 9)
        edges = [e for e in combinations(range(n), 2) if rng.random() < 0.5]
        if clique_number(Graph(n, frozenset(edges))) != oracles.clique_number_exhaustive(n, edges):
            return f"clique mismatch n={n} edges={edges}"
    for n in range(5, 9):
        if clique_number(skeleton_graph(facets(gen_cyclic(4, n)))) != n:
            return f"cyclic skeleton not complete for n={n}"
    return None


def _rc(rng, count):
    for _ in range(count):
        r, c = rng.randint(1, 4), rng.randint(1, 4)
        m = BoolMatrix.from_rows([[int(rng.random() < 0.6) for _ in range(c)] for _ in range(r)])
        lo, ex, hi = fooling_set_bound(m), rc_exact(m), rc_greedy(m)
        if not lo <= ex <= hi or ex != oracles.rc_exhaustive(m.bits):
            return f"rc check failed on {m.bits}: {lo} {ex} {hi}"
    return None


SUITES = {
    "cyclic_max-vs-brute": _cyclic,
    "det-vs-cofactor": _det,
    "facets-dd-vs-brute": _facets,
    "clique-vs-exhaustive": _cliques,
    "rc-vs-exhaustive": _rc,
}


def run(seed=0, count=40):
    """Run every suite; returns a list of (name, error-or-None)."""
    results = []
    for name, suite in SUITES.items():
        rng = random.Random(f"{seed}:{name}")
        results.append((name, suite(rng, count)))
    return results
