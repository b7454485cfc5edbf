"""Hull statistics of BQP_n and its cyclic perturbation for small n.

Facet enumeration of CP(BQP_n) is only practical for n <= 3.

    python3 scripts/perturbed_bqp.py --max-n 3
"""

import argparse
import time

from polycomb.combinatorics import fooling_set_bound, rc_exact, rc_greedy
from polycomb.exact_arith import ResourceError
from polycomb.hull import facets, is_simplicial, nonincidence_matrix, skeleton_graph
from polycomb.pointset import PerturbParams, cyclic_perturb, gen_bqp


def describe(label, x):
    start = time.perf_counter()
    inc = facets(x)
    m = nonincidence_matrix(inc)
    ones = sum(map(sum, m.bits))
    try:
        rc = rc_exact(m)
    except ResourceError:
        rc = f">={fooling_set_bound(m, cap=10**6)}, <={rc_greedy(m)}"
    edges = len(skeleton_graph(inc).edges)
    ms = 1000 * (time.perf_counter() - start)
    print(f"{label:<12} dim={x.dim:<3} vertices={len(x):<3} facets={len(inc.facets):<4} "
          f"edges={edges:<4} simplicial={str(is_simplicial(inc)):<5} ones={ones:<4} rc={rc}  ({ms:.0f} ms)")


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--policy", choices=("minimal-valid", "paper-d-cubed"), default="minimal-valid")
    a = p.parse_args()
    for n in range(2, a.max_n + 1):
        x = gen_bqp(n)
        d = x.dim
        params = PerturbParams.minimal(d) if a.policy == "minimal-valid" else PerturbParams.default(d)
        describe(f"BQP_{n}", x)
        describe(f"CP(BQP_{n})", cyclic_perturb(x, params))
        print(f"{'':<12} K = 2^{params.k_exponent}")


if __name__ == "__main__":
    main()
