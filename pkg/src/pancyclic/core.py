"""Core graph types, path/cycle certificates, and the edge-list text format.

Vertices are dense integer labels ``0..n-1``.  All values are immutable after
construction, so every operation in the library is a pure function and safe
to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class Graph:
    """Simple undirected graph with sorted adjacency.

    Loops are rejected; duplicate edges are collapsed.  Adjacency is exposed
    three ways: sorted neighbor tuples (deterministic iteration), frozensets
    (membership) and integer bitmasks (search kernels).
    """

    __slots__ = ("n", "_nbrs", "_sets", "_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            sets[u].add(v)
            sets[v].add(u)
        self._nbrs = tuple(tuple(sorted(s)) for s in sets)
        self._sets = tuple(frozenset(s) for s in sets)
        masks = []
        for s in sets:
            m = 0
            for w in s:
                m |= 1 << w
            masks.append(m)
        self._masks = tuple(masks)

    @property
    def m(self) -> int:
        return sum(len(t) for t in self._nbrs) // 2

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    def mask(self, v: int) -> int:
        return self._masks[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self._nbrs[u]:
                if u < v:
                    yield (u, v)

    def complement(self) -> "Graph":
        return Graph(
            self.n,
            (
                (u, v)
                for u in range(self.n)
                for v in range(u + 1, self.n)
                if v not in self._sets[u]
            ),
        )

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        """New graph with ``extra`` edges added."""
        return Graph(self.n, list(self.edges()) + list(extra))

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on ``vertices`` plus the new-label -> old-label map."""
        keep = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(keep)}
        sub_edges = [
            (index[u], index[v])
            for u, v in self.edges()
            if u in index and v in index
        ]
        return Graph(len(keep), sub_edges), keep

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._nbrs == other._nbrs
        )

    def __hash__(self) -> int:
        return hash((self.n, self._nbrs))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class Digraph:
    """Directed graph: no loops, and by default at most one arc per vertex
    pair (an orientation of a simple graph).  Pass ``allow_antiparallel=True``
    to permit both u->v and v->u."""

    __slots__ = ("n", "_out", "_out_sets")

    def __init__(
        self,
        n: int,
        arcs: Iterable[tuple[int, int]] = (),
        allow_antiparallel: bool = False,
    ):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        outs: list[set[int]] = [set() for _ in range(n)]
        for u, v in arcs:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u},{v}) out of range for n={n}")
            if not allow_antiparallel and u in outs[v]:
                raise ValueError(f"anti-parallel arc pair between {u} and {v}")
            outs[u].add(v)
        self._out = tuple(tuple(sorted(s)) for s in outs)
        self._out_sets = tuple(frozenset(s) for s in outs)

    def out(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def has_arc(self, u: int, v: int) -> bool:
        return v in self._out_sets[u]

    def arcs(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self._out[u]:
                yield (u, v)

    @property
    def arc_count(self) -> int:
        return sum(len(t) for t in self._out)

    def underlying(self) -> Graph:
        return Graph(self.n, self.arcs())

    def is_dag(self) -> bool:
        indeg = [0] * self.n
        for _, v in self.arcs():
            indeg[v] += 1
        queue = [v for v in range(self.n) if indeg[v] == 0]
        seen = 0
        while queue:
            u = queue.pop()
            seen += 1
            for w in self._out[u]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
        return seen == self.n

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.arc_count})"


@dataclass(frozen=True)
class OrderedPath:
    """Explicit vertex sequence; the certificate for "there is a path".

    ``length`` counts edges, so a single vertex is a path of length 0.
    """

    vertices: tuple[int, ...]

    def __post_init__(self):
        if not self.vertices:
            raise ValueError("a path has at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("path vertices must be distinct")
        object.__setattr__(self, "vertices", tuple(self.vertices))

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.vertices[0], self.vertices[-1])

    def reversed(self) -> "OrderedPath":
        return OrderedPath(tuple(reversed(self.vertices)))


@dataclass(frozen=True)
class CycleWitness:
    """Cyclic vertex sequence; the certificate for "there is a cycle".

    ``length`` counts edges, which for a cycle equals the vertex count.
    """

    vertices: tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) < 3:
            raise ValueError("a cycle has at least three vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("cycle vertices must be distinct")
        object.__setattr__(self, "vertices", tuple(self.vertices))

    @property
    def length(self) -> int:
        return len(self.vertices)

    def rotated_to_min(self) -> "CycleWitness":
        """Same cycle, rotated to start at its minimum label."""
        i = self.vertices.index(min(self.vertices))
        return CycleWitness(self.vertices[i:] + self.vertices[:i])


@dataclass(frozen=True)
class AnalysisParams:
    """Knobs shared by the constructive pipelines.

    k      claimed independence bound (never trusted: certificates are
           re-validated, and exact oracles verify k on test corpora)
    eps    slack parameter in (0, 1)
    gamma  cluster-growth parameter in (0, 1/2)
    c      shortening radius (each shortening step removes < 4c-2 vertices)
    p      density granularity for gap certificates
    """

    k: int
    eps: float = 0.25
    gamma: float = 0.25
    c: int = 1
    p: float = 1.0

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be a positive integer")
        if not 0 < self.eps < 1:
            raise ValueError("eps must lie in (0, 1)")
        if not 0 < self.gamma < 0.5:
            raise ValueError("gamma must lie in (0, 1/2)")
        if self.c < 1:
            raise ValueError("c must be a positive integer")
        if self.p <= 0:
            raise ValueError("p must be positive")


def validate_path(g: Graph, p: OrderedPath) -> bool:
    """True iff the vertices are distinct, in range, and consecutive pairs
    are edges of ``g``.  Total: never raises on malformed content."""
    vs = p.vertices
    if len(set(vs)) != len(vs):
        return False
    if any(not 0 <= v < g.n for v in vs):
        return False
    return all(g.has_edge(vs[i], vs[i + 1]) for i in range(len(vs) - 1))


def validate_cycle(g: Graph, c: CycleWitness) -> bool:
    """True iff the witness is a genuine cycle of ``g`` (wraparound included)."""
    vs = c.vertices
    if len(vs) < 3 or len(set(vs)) != len(vs):
        return False
    if any(not 0 <= v < g.n for v in vs):
        return False
    return all(g.has_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))


def validate_directed_path(d: Digraph, p: OrderedPath) -> bool:
    vs = p.vertices
    if len(set(vs)) != len(vs):
        return False
    if any(not 0 <= v < d.n for v in vs):
        return False
    return all(d.has_arc(vs[i], vs[i + 1]) for i in range(len(vs) - 1))


# --- edge-list text format -------------------------------------------------
#
# Line 1: "n m".  Then m lines "u v" with 0 <= u < v < n.  Lines starting
# with '#' (after stripping) are comments; blank lines are ignored.


def parse_edge_list(text: str) -> Graph:
    rows: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line))
    if not rows:
        raise ValueError("edge list is empty: expected a header line 'n m'")
    head_no, head = rows[0]
    parts = head.split()
    if len(parts) != 2:
        raise ValueError(f"line {head_no}: expected header 'n m'")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise ValueError(f"line {head_no}: non-integer header") from exc
    if n < 0 or m < 0:
        raise ValueError(f"line {head_no}: negative header values")
    if len(rows) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    for lineno, line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ValueError(f"line {lineno}: non-integer endpoint") from exc
        if not 0 <= u < v < n:
            raise ValueError(f"line {lineno}: require 0 <= u < v < n, got {u} {v}")
        edges.append((u, v))
    return Graph(n, edges)


def format_edge_list(g: Graph, comment: str = "") -> str:
    lines = []
    if comment:
        for row in comment.splitlines():
            lines.append(f"# {row}")
    edges = sorted(g.edges())
    lines.append(f"{g.n} {len(edges)}")
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def load_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def save_graph(g: Graph, path, comment: str = "") -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g, comment))
