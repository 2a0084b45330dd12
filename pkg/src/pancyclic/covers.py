"""Constructive path covers of digraphs and low-diameter cluster partitions.

``gallai_milgram_cover`` computes an exact minimum path cover, which in
particular never exceeds the independence number of the underlying graph.
The certificate (vertex-disjoint directed paths covering everything) is
checkable without knowing alpha at all; tests verify the alpha bound against
the exact oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Digraph, Graph, OrderedPath, validate_directed_path
from .errors import InvalidGamma


@dataclass(frozen=True)
class PathCover:
    """Vertex-disjoint directed paths covering every vertex of a digraph."""

    paths: tuple[OrderedPath, ...]

    @property
    def size(self) -> int:
        return len(self.paths)

    def longest(self) -> OrderedPath:
        # ties broken by earliest path (covers are emitted head-label ascending)
        return max(self.paths, key=lambda p: p.order)


def validate_path_cover(d: Digraph, cover: PathCover) -> bool:
    seen: set[int] = set()
    for p in cover.paths:
        if not validate_directed_path(d, p):
            return False
        if seen & set(p.vertices):
            return False
        seen.update(p.vertices)
    return seen == set(range(d.n))


def _max_matching(d: Digraph, forbidden: frozenset[tuple[int, int]]):
    """Deterministic augmenting-path matching between out-copies and in-copies.

    A matched arc set has out-degree and in-degree at most one, i.e. it is a
    union of paths and cycles covering all vertices.
    """
    match_from: dict[int, int] = {}  # u -> v on the selected arc u->v
    match_to: dict[int, int] = {}  # v -> u

    def try_augment(u: int, banned: set[int]) -> bool:
        for v in d.out(u):
            if (u, v) in forbidden or v in banned:
                continue
            banned.add(v)
            if v not in match_to or try_augment(match_to[v], banned):
                match_from[u] = v
                match_to[v] = u
                return True
        return False

    for u in range(d.n):
        try_augment(u, set())
    return match_from, match_to


def _functional_cycles(n: int, match_from: dict[int, int]) -> list[list[int]]:
    """Cycles of the successor map, each reported starting at its min vertex."""
    color = [0] * n  # 0 unseen, 1 on stack, 2 done
    cycles = []
    for s in range(n):
        if color[s]:
            continue
        stack = []
        v = s
        while v is not None and color[v] == 0:
            color[v] = 1
            stack.append(v)
            v = match_from.get(v)
        if v is not None and color[v] == 1:
            cyc = stack[stack.index(v) :]
            m = cyc.index(min(cyc))
            cycles.append(cyc[m:] + cyc[:m])
        for w in stack:
            color[w] = 2
    return cycles


def _paths_from_matching(d: Digraph, match_from: dict[int, int]) -> PathCover:
    match_to = {v: u for u, v in match_from.items()}
    paths = []
    for head in range(d.n):
        if head in match_to:
            continue
        seq = [head]
        while seq[-1] in match_from:
            seq.append(match_from[seq[-1]])
        paths.append(OrderedPath(tuple(seq)))
    return PathCover(tuple(paths))


def gallai_milgram_cover(d: Digraph, caps=None) -> PathCover:
    """Path cover of size at most alpha(underlying graph).

    For acyclic digraphs a maximum matching between out-copies and in-copies
    is automatically cycle-free, so the matching reduction gives the exact
    minimum cover (which the classical theorem bounds by alpha).  Digraphs
    with directed cycles may see the matching close cycles; those are broken
    (one dropped arc each), and when that broken cover is not already within
    the exact independence number, a branch and bound over forbidden arcs
    recovers a small-enough cover.  Minimality is NOT promised in the cyclic
    case (it is NP-hard), only the alpha bound.  The library's own pipelines
    build acyclic orientations exclusively, which stay on the fast path.
    """
    if d.n == 0:
        return PathCover(())
    match_from, _ = _max_matching(d, frozenset())
    if d.is_dag():
        return _paths_from_matching(d, match_from)

    # incumbent: break every selected cycle by dropping one arc
    incumbent = dict(match_from)
    for cyc in _functional_cycles(d.n, match_from):
        del incumbent[cyc[-1]]
    best = {"size": d.n - len(incumbent), "match": incumbent}

    # stop improving once the cover provably meets the alpha bound
    from .errors import CapExceeded
    from .oracles import independence_number

    try:
        target, _ = independence_number(d.underlying(), caps)
    except CapExceeded:
        target = None  # over the oracle cap: fall through to the exact search
    if target is not None and best["size"] <= target:
        return _paths_from_matching(d, best["match"])

    seen: set[frozenset[tuple[int, int]]] = set()

    def solve(forbidden: frozenset[tuple[int, int]]) -> None:
        if forbidden in seen:
            return
        if target is not None and best["size"] <= target:
            return
        seen.add(forbidden)
        mf, _ = _max_matching(d, forbidden)
        if d.n - len(mf) >= best["size"]:
            return  # forbidding more arcs can only shrink the matching
        cycles = _functional_cycles(d.n, mf)
        if not cycles:
            best["size"] = d.n - len(mf)
            best["match"] = dict(mf)
            return
        cyc = min(cycles)  # deterministic branch order
        for i in range(len(cyc)):
            arc = (cyc[i], cyc[(i + 1) % len(cyc)])
            solve(forbidden | {arc})

    solve(frozenset())
    return _paths_from_matching(d, best["match"])


def longest_cover_path(d: Digraph) -> OrderedPath:
    """Longest path of the minimum cover; pigeonhole gives at least
    ceil(n / cover size) vertices."""
    if d.n == 0:
        raise ValueError("empty digraph has no paths")
    return gallai_milgram_cover(d).longest()


# --- low-diameter cluster partition ------------------------------------------


@dataclass(frozen=True)
class Cluster:
    """One BFS-grown cluster: center, members, exact distances and the BFS
    tree (parent of the center is -1)."""

    center: int
    members: tuple[int, ...]
    dist: dict[int, int]
    parent: dict[int, int]

    def tree_path(self, v: int) -> tuple[int, ...]:
        """Shortest center->v path along the BFS tree."""
        seq = [v]
        while seq[-1] != self.center:
            seq.append(self.parent[seq[-1]])
        seq.reverse()
        return tuple(seq)


@dataclass(frozen=True)
class ClusterPartition:
    clusters: tuple[Cluster, ...]
    leftover: frozenset[int]
    gamma: float
    dist_bound: int

    def cluster_of(self) -> dict[int, int]:
        return {v: i for i, cl in enumerate(self.clusters) for v in cl.members}


def growth_bound(gamma: float, n: int) -> int:
    """Minimal integer t with (1+gamma)^t >= n, in exact rational arithmetic
    over the binary value of gamma (no floating-point boundary surprises)."""
    if n <= 1:
        return 0
    base = 1 + Fraction(*float(gamma).as_integer_ratio())
    t = 0
    acc = Fraction(1)
    while acc < n:
        acc *= base
        t += 1
    return t


def bfs_cluster_partition(g: Graph, gamma: float) -> ClusterPartition:
    """Partition most of the graph into mutually non-adjacent low-radius
    clusters.

    Repeatedly grow a BFS ball from the lowest-labeled remaining vertex,
    level by level, until the next level is small (at most gamma times the
    ball so far); keep the ball as a cluster, discard that next level into
    the leftover, and recurse on the rest.  Guarantees:

      1. the clusters cover at least (1 - gamma) * n vertices,
      2. every member is within distance growth_bound(gamma, n) of its center,
      3. no edge joins two distinct clusters.
    """
    if not 0 < gamma < 0.5:
        raise InvalidGamma(f"gamma must lie in (0, 1/2), got {gamma}")
    remaining = set(range(g.n))
    clusters: list[Cluster] = []
    leftover: set[int] = set()
    while remaining:
        root = min(remaining)
        dist = {root: 0}
        parent = {root: -1}
        levels = [[root]]
        while True:
            nxt = []
            for u in levels[-1]:
                for w in g.neighbors(u):
                    if w in remaining and w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        nxt.append(w)
            ball = sum(len(level) for level in levels)
            if len(nxt) <= gamma * ball:
                # keep the ball, discard the small boundary level
                members = sorted(v for level in levels for v in level)
                clusters.append(
                    Cluster(
                        center=root,
                        members=tuple(members),
                        dist={v: dist[v] for v in members},
                        parent={v: parent[v] for v in members},
                    )
                )
                leftover.update(nxt)
                remaining.difference_update(members)
                remaining.difference_update(nxt)
                break
            levels.append(nxt)
    return ClusterPartition(
        clusters=tuple(clusters),
        leftover=frozenset(leftover),
        gamma=gamma,
        dist_bound=growth_bound(gamma, g.n),
    )


def validate_cluster_partition(g: Graph, cp: ClusterPartition) -> bool:
    """Check the three guarantees verbatim, plus disjointness bookkeeping."""
    seen: set[int] = set()
    for cl in cp.clusters:
        if cl.center not in cl.members:
            return False
        if seen & set(cl.members):
            return False
        seen.update(cl.members)
    if seen & cp.leftover:
        return False
    if len(seen) < (1 - cp.gamma) * g.n:
        return False
    for cl in cp.clusters:
        member_set = set(cl.members)
        # distances are genuine BFS distances within the cluster's residual
        # graph, hence upper bounds on distance in g; re-verify via the tree
        for v in cl.members:
            if cl.dist[v] > cp.dist_bound:
                return False
            path = cl.tree_path(v)
            if len(path) - 1 != cl.dist[v]:
                return False
            if any(not g.has_edge(path[i], path[i + 1]) for i in range(len(path) - 1)):
                return False
    owner = cp.cluster_of()
    for u, v in g.edges():
        cu, cv = owner.get(u), owner.get(v)
        if cu is not None and cv is not None and cu != cv:
            return False
    return True
