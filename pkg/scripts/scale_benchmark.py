"""Time min/max Randić optimization on random graphic sequences.

    python3 scripts/scale_benchmark.py --sizes 25 50 100 --reps 3 --maxdeg 10
"""

import argparse
import time

import numpy as np

from randic.graphic import is_graphic
from randic.randic_opt import maximize_randic, minimize_randic


def random_graphic(rng, n, maxdeg):
    while True:
        d = [int(x) for x in rng.integers(1, maxdeg + 1, size=n)]
        if is_graphic(d):
            return d


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", nargs="+", type=int, default=[25, 50, 100])
    ap.add_argument("--reps", type=int, default=3)
    ap.add_argument("--maxdeg", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)

    print("n  rep  R_min  R_max  t_min  t_max")
    for n in args.sizes:
        for rep in range(args.reps):
            d = random_graphic(rng, n, args.maxdeg)
            t0 = time.perf_counter()
            lo = minimize_randic(d).index_value
            t1 = time.perf_counter()
            hi = maximize_randic(d).index_value
            t2 = time.perf_counter()
            print(f"{n}  {rep}  {lo}  {hi}  {t1 - t0:.2f}  {t2 - t1:.2f}")


if __name__ == "__main__":
    main()
