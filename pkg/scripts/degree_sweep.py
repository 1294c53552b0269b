"""Sweep theta and compare the cone-search minimum with ceil(pi/theta) - 2."""

import argparse
import math
import time

import numpy as np

from poincare import PolarQuadratic, optimal_degree
from poincare.optimality import minimal_degree_search, refute_degree


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--r", type=float, default=1.0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    t0 = time.perf_counter()
    mismatches = []
    for th in rng.uniform(0.01, math.pi - 0.01, args.n):
        pq = PolarQuadratic(args.r, float(th))
        s = optimal_degree(pq.theta)
        found = minimal_degree_search(pq, s + 5)
        for t in range(s):
            refute_degree(pq, t)
        if found != s:
            mismatches.append((float(th), s, found))
    dt = time.perf_counter() - t0
    print(f"{args.n} angles in {dt:.2f} s, {len(mismatches)} mismatches")
    for row in mismatches[:10]:
        print("  theta={:.12g} formula={} search={}".format(*row))


if __name__ == "__main__":
    main()
