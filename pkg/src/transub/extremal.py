"""Randomized orientation experiments and cut-balance measurements.

A cut is delta-balanced when the two directions across it differ by at most
``delta`` times half the total; a digraph is (k, delta)-balanced when every
cut of total size at least ``k`` is delta-balanced.  The experiment driver
orients a triangle-free graph uniformly at random, measures the exact maximum
directed cut and the balanced fraction of large cuts per trial, and reports
the observations against two reference bounds: the m/4 floor and a
configurable upper bound of the form m/2 + cprime * m^(4/5).  The upper bound
is reported, never asserted.

Per-trial seeds are derived from ``(master seed, trial index)`` with a
splitmix-style mixer, so trials are independent streams yet byte-for-byte
reproducible; trials may run in any order and reports are merged by index.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from .errors import BudgetError, TriangleFoundError
from .maximum import DEFAULT_VERTEX_BUDGET, VertexPartition, dicut_size, forward_cut_table
from .relation import Relation, UndirectedGraph, find_triangle

DEFAULT_EXHAUSTIVE_VERTEX_BUDGET = 18

_MASK64 = (1 << 64) - 1
_GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def _splitmix64(state: int) -> int:
    z = state & _MASK64
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK64
    return (z ^ (z >> 31)) & _MASK64


def mix_seed(master_seed: int, trial: int) -> int:
    """Per-trial seed: splitmix64 finalizer applied to master + (trial+1) * gamma."""
    return _splitmix64(master_seed + (trial + 1) * _GOLDEN_GAMMA)


@dataclass(frozen=True)
class BalanceVerdict:
    """Outcome of the delta-balance test for one cut."""

    cut_total: int
    imbalance: int
    delta: float
    balanced: bool


@dataclass(frozen=True)
class TrialReport:
    """One orientation trial: sizes, exact max dicut, bounds, balance fraction."""

    seed: int
    n: int
    m: int
    max_dicut: int
    bound_m4: float
    bound_upper: float
    balanced_fraction: float


@dataclass(frozen=True)
class ExperimentSummary:
    """Aggregate of an orientation experiment, comparing the union-bound
    prediction ``2^n * 2 * exp(-delta^2 k / 6)`` for an unbalanced large cut
    against the observed fraction of trials containing one."""

    trials: int
    n: int
    m: int
    k: int
    delta: float
    cprime: float
    chernoff_bound: float
    unbalanced_fraction: float
    balance_guaranteed: bool
    min_max_dicut: int
    max_max_dicut: int


def balance_verdict(forward: int, backward: int, delta: float) -> BalanceVerdict:
    """Evaluate |forward - backward| <= delta * (forward + backward) / 2."""
    if delta < 0:
        raise ValueError(f"delta must be non-negative, got {delta}")
    cut_total = forward + backward
    imbalance = abs(forward - backward)
    return BalanceVerdict(cut_total, imbalance, delta, imbalance <= delta * cut_total / 2)


def check_delta_balanced(r: Relation, p: VertexPartition, delta: float) -> BalanceVerdict:
    d = dicut_size(r, p)
    return balance_verdict(d.forward, d.backward, delta)


def _cut_totals(adj: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Forward and backward cut sizes for every bipartition with vertex 1 in U
    (one representative per unordered bipartition)."""
    n = adj.shape[0]
    forward = forward_cut_table(adj)
    backward = forward_cut_table(adj.T)
    masks = np.arange(1 << n, dtype=np.int64)
    pick = (masks & 1) == 1
    return forward[pick], backward[pick]


def check_k_delta_balanced(
    r: Relation,
    k: int,
    delta: float,
    vertex_budget: int = DEFAULT_EXHAUSTIVE_VERTEX_BUDGET,
) -> bool:
    """True iff every cut of total size >= k is delta-balanced, exhaustively
    over all 2^(n-1) distinct bipartitions."""
    if delta < 0:
        raise ValueError(f"delta must be non-negative, got {delta}")
    if r.n > vertex_budget:
        raise BudgetError(
            f"{r.n} vertices exceeds the enumeration budget of {vertex_budget}"
        )
    forward, backward = _cut_totals(r.adj)
    totals = forward + backward
    large = totals >= k
    if not large.any():
        return True
    imbalance = np.abs(forward - backward)[large]
    return bool(np.all(imbalance <= delta * totals[large] / 2))


def random_orientation(g: UndirectedGraph, seed: int) -> Relation:
    """Orient every edge independently by a fair coin from the seeded stream.

    Edges are consumed in sorted order; a set bit keeps the (min, max)
    direction.  The same seed always reproduces the same orientation.
    """
    rng = random.Random(seed)
    arcs = []
    for u, v in g.sorted_edges():
        arcs.append((u, v) if rng.getrandbits(1) else (v, u))
    return Relation.from_arcs(g.n, arcs)


def random_triangle_free_graph(n: int, m: int, seed: int) -> UndirectedGraph:
    """Random balanced bipartite graph on n vertices with m edges, which is
    triangle-free by construction.  Left part is {1..ceil(n/2)}; m distinct
    cross pairs are sampled without replacement from the seeded stream."""
    left = (n + 1) // 2
    capacity = left * (n - left)
    if m < 0:
        raise ValueError(f"edge count must be non-negative, got {m}")
    if m > capacity:
        raise ValueError(f"{m} edges exceeds the bipartite capacity {capacity}")
    pairs = [(u, v) for u in range(1, left + 1) for v in range(left + 1, n + 1)]
    rng = random.Random(seed)
    return UndirectedGraph.from_edges(n, rng.sample(pairs, m))


def run_balance_experiment(
    g: UndirectedGraph,
    trials: int,
    k: int,
    delta: float,
    seed: int,
    cprime: float,
) -> list[TrialReport]:
    """Orient ``g`` once per trial and report exact max dicut plus the
    fraction of size->=k cuts that are delta-balanced."""
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    if delta < 0:
        raise ValueError(f"delta must be non-negative, got {delta}")
    triangle = find_triangle(g)
    if triangle is not None:
        raise TriangleFoundError(triangle)
    if g.n > DEFAULT_VERTEX_BUDGET:
        raise BudgetError(
            f"{g.n} vertices exceeds the exact-dicut budget of {DEFAULT_VERTEX_BUDGET}"
        )
    m = g.m
    bound_m4 = m / 4
    bound_upper = m / 2 + cprime * m ** 0.8
    reports = []
    for t in range(trials):
        trial_seed = mix_seed(seed, t)
        oriented = random_orientation(g, trial_seed)
        forward = forward_cut_table(oriented.adj)
        max_dicut = int(forward.max())
        fwd_half, bwd_half = _cut_totals(oriented.adj)
        totals = fwd_half + bwd_half
        large = totals >= k
        if large.any():
            balanced = np.abs(fwd_half - bwd_half)[large] <= delta * totals[large] / 2
            fraction = float(balanced.sum() / large.sum())
        else:
            fraction = 1.0
        reports.append(
            TrialReport(
                seed=trial_seed,
                n=g.n,
                m=m,
                max_dicut=max_dicut,
                bound_m4=bound_m4,
                bound_upper=bound_upper,
                balanced_fraction=fraction,
            )
        )
    return reports


def summarize_balance_experiment(
    reports: list[TrialReport], k: int, delta: float, cprime: float
) -> ExperimentSummary:
    if not reports:
        raise ValueError("no trial reports to summarize")
    n = reports[0].n
    m = reports[0].m
    unbalanced = sum(1 for rep in reports if rep.balanced_fraction < 1.0)
    chernoff = (2.0 ** n) * 2.0 * math.exp(-delta * delta * k / 6.0)
    return ExperimentSummary(
        trials=len(reports),
        n=n,
        m=m,
        k=k,
        delta=delta,
        cprime=cprime,
        chernoff_bound=chernoff,
        unbalanced_fraction=unbalanced / len(reports),
        balance_guaranteed=n < k * delta * delta / 6.0,
        min_max_dicut=min(rep.max_dicut for rep in reports),
        max_max_dicut=max(rep.max_dicut for rep in reports),
    )
