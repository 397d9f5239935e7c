#!/usr/bin/env python3
"""Compare wall time of the two maximal-extraction routes as n grows.

Sparse inputs (m = 4n) expose the gap between probing every matrix cell and
extracting each row's present arcs; dense inputs (m = n^2/4) make the arc
sweeps dominate so the two routes converge.

Example:
    python scripts/bench_scaling.py --sizes 250,500,1000,2000 --repetitions 5
"""

import argparse

from transub import BenchConfig, doubling_ratios, run_scaling


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="500,1000,2000")
    parser.add_argument("--density", choices=("sparse", "dense"), default="sparse")
    parser.add_argument("--repetitions", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    config = BenchConfig(
        sizes=tuple(int(tok) for tok in args.sizes.split(",")),
        density=args.density,
        repetitions=args.repetitions,
        seed=args.seed,
    )
    rows = run_scaling(config)
    print(f"{'n':>7} {'m':>9} {'v1_ms':>10} {'v2_ms':>10} {'speedup':>8}")
    for row in rows:
        speedup = row.v1_median_ns / row.v2_median_ns if row.v2_median_ns else float("inf")
        print(f"{row.n:7d} {row.m:9d} {row.v1_median_ns / 1e6:10.2f} "
              f"{row.v2_median_ns / 1e6:10.2f} {speedup:8.2f}")
    for small, big, r1, r2 in doubling_ratios(rows):
        print(f"doubling {small}->{big}: v1 x{r1:.2f}, v2 x{r2:.2f}")


if __name__ == "__main__":
    main()
