#!/usr/bin/env python3
"""Sweep the balance tolerance over random orientations of a bipartite graph.

For each delta in the sweep, orients the same seeded graph ``trials`` times
and tabulates how often a large cut (total size >= k) fails the balance test,
next to the union-bound prediction 2^n * 2 * exp(-delta^2 k / 6).

Example:
    python scripts/balance_experiment.py --n 16 --m 60 --trials 50 \
        --deltas 0.2,0.5,1.0,2.0
"""

import argparse

from transub import (
    random_triangle_free_graph,
    run_balance_experiment,
    summarize_balance_experiment,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=16)
    parser.add_argument("--m", type=int, default=60)
    parser.add_argument("--trials", type=int, default=50)
    parser.add_argument("--k", type=int, default=None, help="default: ceil(m/4)")
    parser.add_argument("--deltas", default="0.2,0.5,1.0,2.0")
    parser.add_argument("--cprime", type=float, default=1.0)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    graph = random_triangle_free_graph(args.n, args.m, args.seed)
    k = args.k if args.k is not None else max(1, -(-args.m // 4))
    deltas = [float(tok) for tok in args.deltas.split(",")]

    print(f"graph: n={graph.n} m={graph.m} k={k} trials={args.trials} seed={args.seed}")
    print(f"{'delta':>8} {'predicted':>12} {'observed':>10} {'guaranteed':>10} "
          f"{'min_dicut':>10} {'max_dicut':>10}")
    for delta in deltas:
        reports = run_balance_experiment(graph, args.trials, k, delta, args.seed, args.cprime)
        s = summarize_balance_experiment(reports, k, delta, args.cprime)
        predicted = min(1.0, s.chernoff_bound)
        print(f"{delta:8.3f} {predicted:12.4g} {s.unbalanced_fraction:10.3f} "
              f"{str(s.balance_guaranteed):>10} {s.min_max_dicut:10d} {s.max_max_dicut:10d}")


if __name__ == "__main__":
    main()
