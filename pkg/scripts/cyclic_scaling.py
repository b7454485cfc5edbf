"""Evaluation counts of cyclic_max against N, next to the 2 d^2 ceil(log2 N) + 4d budget.

    python3 scripts/cyclic_scaling.py --d 6 --trials 30
"""

import argparse
import random
import time
from dataclasses import dataclass

from polycomb.optimize import brute_max, cyclic_max
from polycomb.pointset import GSpec, gen_cyclic


@dataclass
class Settings:
    d: int = 6
    trials: int = 30
    max_log_n: int = 14
    coeff: int = 16
    seed: int = 0
    check: bool = False


def run(s: Settings):
    rng = random.Random(s.seed)
    objectives = [tuple(rng.randint(-s.coeff, s.coeff) for _ in range(s.d)) for _ in range(s.trials)]
    print(f"d={s.d} trials={s.trials} |c|_inf<={s.coeff}")
    print(f"{'N':>8} {'mean':>8} {'max':>6} {'budget':>7} {'mean/log2N':>11} {'ms':>7}")
    for k in range(2, s.max_log_n + 1):
        n = 2**k
        start = time.perf_counter()
        evals = []
        for c in objectives:
            r = cyclic_max(s.d, n, GSpec(), c)
            evals.append(r.evaluations)
            if s.check:
                assert r.value == brute_max(gen_cyclic(s.d, n), c).value
        ms = 1000 * (time.perf_counter() - start)
        mean = sum(evals) / len(evals)
        budget = 2 * s.d * s.d * k + 4 * s.d
        print(f"{n:>8} {mean:>8.1f} {max(evals):>6} {budget:>7} {mean / k:>11.2f} {ms:>7.1f}")


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--d", type=int, default=Settings.d)
    p.add_argument("--trials", type=int, default=Settings.trials)
    p.add_argument("--max-log-n", type=int, default=Settings.max_log_n)
    p.add_argument("--coeff", type=int, default=Settings.coeff)
    p.add_argument("--seed", type=int, default=Settings.seed)
    p.add_argument("--check", action="store_true", help="also compare with brute force")
    a = p.parse_args()
    run(Settings(a.d, a.trials, a.max_log_n, a.coeff, a.seed, a.check))


if __name__ == "__main__":
    main()
