"""Random sweep of the duality and root-count properties; prints a summary table."""

import argparse
import time

from tridet.detrep import detrep_build
from tridet.hankel import duality_check
from tridet.random_instances import InstanceConfig, random_pair, roots_and_quadratics
from tridet.srems import srems_compute, sturm_count, DegreeBreakdown


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--max-degree", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    cfg = InstanceConfig(max_degree=args.max_degree, seed=args.seed)
    rng = cfg.rng()

    t0 = time.perf_counter()
    by_degree = {}
    for _ in range(args.count):
        p, q = random_pair(rng, cfg)
        row = by_degree.setdefault(p.degree, [0, 0, 0])
        row[0] += 1
        if srems_compute(p, q).breakdown is None:
            row[1] += 1
            row[2] += duality_check(p, q)
    print("deg  pairs  no-breakdown  dual ok")
    for n in sorted(by_degree):
        print(f"{n:>3}  {by_degree[n][0]:>5}  {by_degree[n][1]:>12}  {by_degree[n][2]:>7}")

    mismatches = breakdowns = 0
    for _ in range(args.count):
        p, k = roots_and_quadratics(rng, args.max_degree)
        try:
            mismatches += sturm_count(p) != k
        except DegreeBreakdown:
            breakdowns += 1
        mismatches += detrep_build(p, args.seed).sgnJ != k
    print(f"root counts: {mismatches} mismatches, {breakdowns} Sturm breakdowns")
    print(f"elapsed {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
