"""Vertex, facet and edge counts of the triangle-free simplex extension, with its clique number.

    python3 scripts/simplex_extension.py --max-d 6
"""

import argparse
import time

from polycomb.combinatorics import clique_number
from polycomb.hull import facets, skeleton_graph
from polycomb.pointset import gen_simplex_extension


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-d", type=int, default=5)
    a = p.parse_args()
    print(f"{'d':>2} {'vertices':>8} {'2^(d+1)-2-d':>11} {'facets':>6} {'edges':>6} {'omega':>5} {'ms':>8}")
    for d in range(3, a.max_d + 1):
        start = time.perf_counter()
        x = gen_simplex_extension(d)
        inc = facets(x)
        sk = skeleton_graph(inc, cap=10**4)
        w = clique_number(sk, cap=10**4)
        ms = 1000 * (time.perf_counter() - start)
        print(f"{d:>2} {len(x):>8} {2 ** (d + 1) - 2 - d:>11} {len(inc.facets):>6} {len(sk.edges):>6} {w:>5} {ms:>8.1f}")


if __name__ == "__main__":
    main()
