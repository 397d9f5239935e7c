"""CNF encoding whose max-ones solutions are maximum transitive subgraphs.

One boolean variable per arc, numbered by row-major arc order.  For every
two-arc walk ``(i, k), (k, j)`` whose forced arc ``(i, j)`` is distinct from
both premises, a clause is emitted: ``(x_ij | ~x_ik | ~x_kj)`` when the forced
arc exists in the relation, and the premise-only clause ``(~x_ik | ~x_kj)``
when it does not (absent arcs are fixed false, which deletes their literals).
Walks with a repeated endpoint are included, so satisfying assignments decode
to transitive sub-relations even in the presence of loops and 2-cycles.

Every emitted clause keeps at least one negative literal, so the all-false
assignment always satisfies the formula.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import BudgetError
from .relation import Arc, Relation

MAX_ONES_VAR_BUDGET = 24


@dataclass
class CnfFormula:
    """Clause list over arc-indexed variables with the variable->arc mapping."""

    num_vars: int
    clauses: list[list[int]] = field(default_factory=list)
    var_to_arc: dict[int, Arc] = field(default_factory=dict)


@dataclass(frozen=True)
class Assignment:
    """Truth values, one per variable, index v-1 for variable v."""

    values: tuple[bool, ...]

    def true_count(self) -> int:
        return sum(self.values)


def encode_mts_to_cnf(r: Relation) -> CnfFormula:
    arcs = r.arcs()
    var_of = {arc: i + 1 for i, arc in enumerate(arcs)}
    adj = r.adj
    n = r.n
    clauses: list[list[int]] = []
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            if k == i or not adj[i - 1, k - 1]:
                continue  # k == i forces (i, j) == (k, j): auto-satisfied
            for j in range(1, n + 1):
                if j == k or not adj[k - 1, j - 1]:
                    continue  # j == k forces (i, j) == (i, k): auto-satisfied
                premise = [-var_of[(i, k)], -var_of[(k, j)]]
                if adj[i - 1, j - 1]:
                    clauses.append([var_of[(i, j)]] + premise)
                else:
                    clauses.append(premise)
    return CnfFormula(len(arcs), clauses, {v: arc for arc, v in var_of.items()})


def cnf_to_dimacs(f: CnfFormula) -> str:
    """Standard CNF text layout, preceded by comments pinning the
    variable->arc mapping."""
    lines = [f"c var {v} = arc {f.var_to_arc[v][0]} {f.var_to_arc[v][1]}"
             for v in range(1, f.num_vars + 1)]
    lines.append(f"p cnf {f.num_vars} {len(f.clauses)}")
    for clause in f.clauses:
        lines.append(" ".join(str(lit) for lit in clause) + " 0")
    return "\n".join(lines) + "\n"


def satisfies(f: CnfFormula, a: Assignment) -> bool:
    if len(a.values) != f.num_vars:
        raise ValueError(
            f"assignment has {len(a.values)} values, formula has {f.num_vars} variables"
        )
    for clause in f.clauses:
        if not any(
            a.values[lit - 1] if lit > 0 else not a.values[-lit - 1] for lit in clause
        ):
            return False
    return True


def decode_assignment(r: Relation, f: CnfFormula, a: Assignment) -> Relation:
    """Sub-relation selected by a satisfying assignment; transitive by
    construction of the clause set."""
    if not satisfies(f, a):
        raise ValueError("assignment does not satisfy the formula")
    chosen = [f.var_to_arc[v] for v in range(1, f.num_vars + 1) if a.values[v - 1]]
    return Relation.from_arcs(r.n, chosen)


def max_ones_brute_force(f: CnfFormula) -> tuple[Assignment, int]:
    """Among all satisfying assignments, maximize the number of true
    variables; ties resolved to the lexicographically largest value vector."""
    v = f.num_vars
    if v > MAX_ONES_VAR_BUDGET:
        raise BudgetError(f"{v} variables exceeds the enumeration budget of {MAX_ONES_VAR_BUDGET}")
    masks = np.arange(1 << v, dtype=np.uint32)
    sat = np.ones(masks.shape, dtype=bool)
    for clause in f.clauses:
        hit = np.zeros(masks.shape, dtype=bool)
        for lit in clause:
            bit = (masks >> (abs(lit) - 1)) & 1
            hit |= (bit == 1) if lit > 0 else (bit == 0)
        sat &= hit
    if not sat.any():
        raise ValueError("formula is unsatisfiable")
    ones = np.zeros(masks.shape, dtype=np.int8)
    for shift in range(v):
        ones += ((masks >> shift) & 1).astype(np.int8)
    best = int(ones[sat].max())
    candidates = masks[sat & (ones == best)]
    keys = np.zeros(candidates.shape, dtype=np.int64)
    for shift in range(v):
        # variable 1 is the most significant digit of the value vector
        keys |= ((candidates >> shift) & 1).astype(np.int64) << (v - 1 - shift)
    winner = int(candidates[int(np.argmax(keys))])
    values = tuple(bool((winner >> shift) & 1) for shift in range(v))
    return Assignment(values), best
