"""Independent oracles and generators shared across the test suite.

Oracles here deliberately avoid the library's code paths: transitivity by
triple loop, closure by iterated squaring over bitmask rows, cuts by direct
enumeration.  They are the second route of every dual-route check.
"""

from __future__ import annotations

import itertools
import random

from hypothesis import strategies as st

from transub import Relation, UndirectedGraph


# ---------------------------------------------------------------------------
# Exhaustive generators
# ---------------------------------------------------------------------------


def ordered_pairs(n: int, loops: bool) -> list[tuple[int, int]]:
    return [
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if loops or i != j
    ]


def relation_from_mask(n: int, pairs: list[tuple[int, int]], mask: int) -> Relation:
    return Relation.from_arcs(
        n, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
    )


def all_relations(n: int, loops: bool) -> list[Relation]:
    pairs = ordered_pairs(n, loops)
    return [relation_from_mask(n, pairs, mask) for mask in range(1 << len(pairs))]


def random_digraph(rng: random.Random, n: int, p: float, loops: bool = False) -> Relation:
    arcs = [pair for pair in ordered_pairs(n, loops) if rng.random() < p]
    return Relation.from_arcs(n, arcs)


# ---------------------------------------------------------------------------
# Oracles
# ---------------------------------------------------------------------------


def oracle_is_transitive(r: Relation) -> bool:
    adj = r.adj
    n = r.n
    for a in range(n):
        for b in range(n):
            if not adj[a, b]:
                continue
            for c in range(n):
                if adj[b, c] and not adj[a, c]:
                    return False
    return True


def oracle_closure_arcs(r: Relation) -> set[tuple[int, int]]:
    """Transitive closure by iterated squaring: R <- R | R.R until stable."""
    n = r.n
    rows = [0] * n
    for u, v in r.arcs():
        rows[u - 1] |= 1 << (v - 1)
    while True:
        squared = []
        for i in range(n):
            acc = rows[i]
            reach = rows[i]
            k = 0
            while reach:
                if reach & 1:
                    acc |= rows[k]
                reach >>= 1
                k += 1
            squared.append(acc)
        if squared == rows:
            return {
                (i + 1, j + 1)
                for i in range(n)
                for j in range(n)
                if (rows[i] >> j) & 1
            }
        rows = squared


def oracle_forward_counts(r: Relation) -> list[int]:
    """Forward cut size for every side mask (bit v set = vertex v+1 in U)."""
    arcs = r.arcs()
    n = r.n
    return [
        sum(
            1
            for u, v in arcs
            if (mask >> (u - 1)) & 1 and not (mask >> (v - 1)) & 1
        )
        for mask in range(1 << n)
    ]


def oracle_max_transitive_size(r: Relation) -> int:
    """Maximum transitive subset size by direct subset enumeration."""
    arcs = r.arcs()
    best = 0
    for size in range(len(arcs), 0, -1):
        if size <= best:
            break
        for subset in itertools.combinations(arcs, size):
            if oracle_is_transitive(Relation.from_arcs(r.n, subset)):
                return size
    return best


def cut_edge_count(g: UndirectedGraph, u_vertices: set[int]) -> int:
    return sum(1 for a, b in g.edges if (a in u_vertices) != (b in u_vertices))


# ---------------------------------------------------------------------------
# Hypothesis strategies
# ---------------------------------------------------------------------------


@st.composite
def relations(draw, max_n: int = 6, loops: bool = True) -> Relation:
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = ordered_pairs(n, loops)
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))) if pairs else []
    return Relation.from_arcs(n, chosen)


@st.composite
def undirected_graphs(draw, max_n: int = 8) -> UndirectedGraph:
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))) if pairs else []
    return UndirectedGraph.from_edges(n, chosen)
