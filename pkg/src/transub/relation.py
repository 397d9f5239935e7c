"""Binary relations as dense boolean matrices, plus digraph predicates and file formats.

A relation on ``{1..n}`` is stored as an n-by-n boolean adjacency matrix;
``adj[i][j]`` (0-based internally) records whether the arc ``(i+1, j+1)`` is
present.  Loops are permitted and count toward the arc total ``m``.  All values
are immutable once constructed and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParseError

Arc = tuple[int, int]
ArcList = list[Arc]

EDGE_LIST_FORMAT = "edge-list"
MATRIX_FORMAT = "matrix"


class Relation:
    """A binary relation on ``{1..n}``; arcs are 1-based ``(source, target)`` pairs."""

    __slots__ = ("_adj", "_m")

    def __init__(self, adj) -> None:
        arr = np.array(adj, dtype=bool)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"adjacency matrix must be square, got shape {arr.shape}")
        if arr.shape[0] < 1:
            raise ValueError("vertex count must be at least 1")
        arr.setflags(write=False)
        self._adj = arr
        self._m = int(arr.sum())

    @property
    def adj(self) -> np.ndarray:
        """Read-only n-by-n boolean adjacency matrix."""
        return self._adj

    @property
    def n(self) -> int:
        return self._adj.shape[0]

    @property
    def m(self) -> int:
        """Arc count: the number of true matrix entries, loops included."""
        return self._m

    @classmethod
    def empty(cls, n: int) -> "Relation":
        return cls(np.zeros((n, n), dtype=bool))

    @classmethod
    def from_arcs(cls, n: int, arcs) -> "Relation":
        """Build a relation from 1-based arc pairs; duplicates collapse."""
        adj = np.zeros((n, n), dtype=bool)
        for u, v in arcs:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"arc ({u}, {v}) out of range 1..{n}")
            adj[u - 1, v - 1] = True
        return cls(adj)

    def arcs(self) -> ArcList:
        """All arcs in row-major order, 1-based."""
        return [(int(u) + 1, int(v) + 1) for u, v in np.argwhere(self._adj)]

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self._adj[u - 1, v - 1])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Relation):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self._adj, other._adj))

    def __hash__(self) -> int:
        return hash((self.n, self._adj.tobytes()))

    def __repr__(self) -> str:
        return f"Relation(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class UndirectedGraph:
    """Simple undirected graph: no loops, each edge stored once as ``(u, v)`` with u < v."""

    n: int
    edges: frozenset[Arc]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("vertex count must be at least 1")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop ({u}, {v}) not allowed")
            if not (1 <= u < v <= self.n):
                raise ValueError(f"edge ({u}, {v}) must satisfy 1 <= u < v <= n")

    @classmethod
    def from_edges(cls, n: int, edges) -> "UndirectedGraph":
        """Build from arbitrary unordered pairs; orientation and duplicates are normalized away."""
        normalized = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop ({u}, {v}) not allowed")
            normalized.add((min(u, v), max(u, v)))
        return cls(n, frozenset(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Arc]:
        return sorted(self.edges)

    def neighbor_sets(self) -> list[set[int]]:
        """Neighbor sets indexed 1..n (index 0 unused)."""
        nbrs: list[set[int]] = [set() for _ in range(self.n + 1)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return nbrs


# ---------------------------------------------------------------------------
# Parsing and serialization
#
# Edge-list format: optional '#' comment lines; first content line "n m"; then
# one "u v" line per arc (1-based).  Matrix format: n lines of exactly n
# characters from {0, 1}.  Serializers emit arcs in row-major order without
# comments.
# ---------------------------------------------------------------------------


def parse_edge_list(text: str) -> Relation:
    n = None
    arcs: list[Arc] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2:
                raise ParseError("header must be two integers 'n m'", lineno)
            try:
                n, m_declared = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise ParseError(f"non-integer token in header: {line!r}", lineno) from None
            if n < 1:
                raise ParseError(f"vertex count must be at least 1, got {n}", lineno)
            if m_declared < 0:
                raise ParseError(f"arc count must be non-negative, got {m_declared}", lineno)
            continue
        if len(tokens) != 2:
            raise ParseError(f"arc line must be two integers 'u v': {line!r}", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"non-integer token in arc line: {line!r}", lineno) from None
        if not (1 <= u <= n) or not (1 <= v <= n):
            raise ParseError(f"vertex index out of range [1, {n}]: ({u}, {v})", lineno)
        arcs.append((u, v))
    if n is None:
        raise ParseError("empty document: missing 'n m' header")
    return Relation.from_arcs(n, arcs)


def parse_matrix(text: str) -> Relation:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError("empty document")
    n = len(lines)
    adj = np.zeros((n, n), dtype=bool)
    for i, line in enumerate(lines):
        if len(line) != n:
            raise ParseError(f"row has {len(line)} characters, expected {n}", i + 1)
        if set(line) - {"0", "1"}:
            raise ParseError(f"characters outside {{0, 1}}: {line!r}", i + 1)
        adj[i] = np.frombuffer(line.encode("ascii"), dtype=np.uint8) == ord("1")
    return Relation(adj)


def serialize_edge_list(r: Relation) -> str:
    lines = [f"{r.n} {r.m}"]
    lines.extend(f"{u} {v}" for u, v in r.arcs())
    return "\n".join(lines) + "\n"


def serialize_matrix(r: Relation) -> str:
    rows = ["".join("1" if x else "0" for x in row) for row in r.adj]
    return "\n".join(rows) + "\n"


def detect_format(text: str) -> str:
    """Classify a document: a two-integer first content line means edge list, a
    pure 0/1 line means matrix.  Comment lines only occur in edge lists."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            return EDGE_LIST_FORMAT
        tokens = line.split()
        if len(tokens) == 2:
            try:
                int(tokens[0]), int(tokens[1])
            except ValueError:
                raise ParseError(f"unrecognized input format: {line!r}", lineno) from None
            return EDGE_LIST_FORMAT
        if len(tokens) == 1 and not (set(line) - {"0", "1"}):
            return MATRIX_FORMAT
        raise ParseError(f"unrecognized input format: {line!r}", lineno)
    raise ParseError("empty document")


def parse_relation(text: str) -> tuple[Relation, str]:
    """Parse either supported format, auto-detected; returns (relation, format name)."""
    fmt = detect_format(text)
    if fmt == EDGE_LIST_FORMAT:
        return parse_edge_list(text), fmt
    return parse_matrix(text), fmt


def serialize_relation(r: Relation, fmt: str) -> str:
    if fmt == EDGE_LIST_FORMAT:
        return serialize_edge_list(r)
    if fmt == MATRIX_FORMAT:
        return serialize_matrix(r)
    raise ValueError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------
# Predicates and closure
# ---------------------------------------------------------------------------


def _compose(adj: np.ndarray) -> np.ndarray:
    # Boolean matrix square via float32 BLAS; exact since row sums stay < 2**24.
    prod = adj.astype(np.float32) @ adj.astype(np.float32)
    return prod > 0.5


def is_transitive(r: Relation) -> bool:
    """True iff for all a, b, c (repeats allowed): a->b and b->c imply a->c."""
    adj = r.adj
    return not bool(np.any(_compose(adj) & ~adj))


def _warshall_inplace(adj: np.ndarray) -> np.ndarray:
    # Pivot index outermost; inner two loops are vectorized as an outer product.
    n = adj.shape[0]
    for k in range(n):
        adj |= adj[:, k : k + 1] & adj[k : k + 1, :]
    return adj


def transitive_closure(r: Relation) -> Relation:
    """Smallest transitive relation containing ``r``.

    Reachability by nonempty paths: ``(i, i)`` appears only when ``i`` lies on
    a directed cycle; no reflexive padding is added.
    """
    adj = r.adj.copy()
    _warshall_inplace(adj)
    return Relation(adj)


def is_subrelation(a: Relation, b: Relation) -> bool:
    """True iff every arc of ``a`` is an arc of ``b``."""
    if a.n != b.n:
        raise ValueError(f"vertex count mismatch: {a.n} != {b.n}")
    return not bool(np.any(a.adj & ~b.adj))


def underlying_graph(r: Relation) -> UndirectedGraph:
    """Forget arc directions and drop loops."""
    sym = r.adj | r.adj.T
    edges = frozenset(
        (int(u) + 1, int(v) + 1) for u, v in np.argwhere(np.triu(sym, k=1))
    )
    return UndirectedGraph(r.n, edges)


def find_triangle(g: UndirectedGraph) -> tuple[int, int, int] | None:
    """Return one triangle as a sorted vertex triple, or None."""
    masks = [0] * (g.n + 1)
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    for u, v in g.sorted_edges():
        common = masks[u] & masks[v]
        if common:
            w = (common & -common).bit_length() - 1  # lowest common neighbor
            return tuple(sorted((u, v, w)))  # type: ignore[return-value]
    return None


def is_triangle_free(g: UndirectedGraph) -> bool:
    """True iff no three vertices are pairwise adjacent."""
    return find_triangle(g) is None


def has_path_length_two(r: Relation) -> bool:
    """True iff some vertex has both an incoming and an outgoing arc
    (endpoints of the two-step walk may coincide)."""
    adj = r.adj
    return bool(np.any(adj.any(axis=0) & adj.any(axis=1)))
