"""Dense vertex pairs: one endpoint pair realizing many consecutive path
lengths, plus the gap-density predicate used to state such guarantees.

A ``DensePairCertificate`` is self-contained: one explicit path per achieved
length, all sharing the same endpoints.  Its construction walks a longest
directed path of a distance-oriented cluster and swaps spine prefixes for
BFS-tree shortcuts, which changes the total length by at most one per step.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import AnalysisParams, Digraph, Graph, OrderedPath, validate_path
from .covers import bfs_cluster_partition, gallai_milgram_cover
from .oracles import OracleCaps, xy_path_lengths


@dataclass(frozen=True)
class DensePairCertificate:
    """Endpoint pair plus one validated path per achieved length (in edges)."""

    u: int
    v: int
    paths: dict[int, OrderedPath]
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.paths:
            raise ValueError("certificate needs at least one path")

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(sorted(self.paths))

    @property
    def lo(self) -> int:
        return min(self.paths)

    @property
    def hi(self) -> int:
        return max(self.paths)

    @property
    def achieved_interval(self) -> tuple[int, int]:
        return (self.lo, self.hi)

    @property
    def max_gap(self) -> int:
        """Largest jump between consecutive achieved lengths (1 = contiguous)."""
        ls = self.lengths
        if len(ls) == 1:
            return 0
        return max(b - a for a, b in zip(ls, ls[1:]))

    @property
    def width(self) -> int:
        return self.hi - self.lo


def validate_dense_certificate(
    g: Graph, cert: DensePairCertificate, require_contiguous: bool = False
) -> bool:
    for ell, path in cert.paths.items():
        if path.length != ell:
            return False
        if path.endpoints not in ((cert.u, cert.v), (cert.v, cert.u)):
            return False
        if not validate_path(g, path):
            return False
    if require_contiguous and cert.max_gap > 1:
        return False
    return True


def find_dense_pair(g: Graph, params: AnalysisParams) -> DensePairCertificate:
    """Find a vertex pair joined by paths of every length in an interval.

    Pipeline: partition most of the graph into non-adjacent low-radius
    clusters; orient intra-cluster edges from smaller to larger center
    distance (ties from lower to higher label, making the orientation
    acyclic); take the longest path of a minimum path cover, which lies
    inside a single cluster; then, for each spine vertex x_i, combine the
    BFS-tree path from the center with the spine suffix after x_i.
    Consecutive combined paths differ in length by at most one, so every
    length between the shortest and the longest is achieved.

    Never fails: degenerate inputs yield a certificate of width 0.
    """
    if g.n == 0:
        raise ValueError("graph must be nonempty")
    cp = bfs_cluster_partition(g, params.gamma)
    owner = cp.cluster_of()
    arcs = []
    for x, y in g.edges():
        cx, cy = owner.get(x), owner.get(y)
        if cx is None or cy is None or cx != cy:
            continue
        cl = cp.clusters[cx]
        dx, dy = cl.dist[x], cl.dist[y]
        if (dx, x) < (dy, y):
            arcs.append((x, y))
        else:
            arcs.append((y, x))
    oriented = Digraph(g.n, arcs)
    cover = gallai_milgram_cover(oriented)
    # the longest path whose vertices sit in a cluster (arcs exist only
    # inside clusters, so any non-singleton path qualifies; leftover
    # vertices are isolated singletons)
    candidates = [p for p in cover.paths if p.vertices[0] in owner]
    spine = max(candidates, key=lambda p: p.order)
    cluster = cp.clusters[owner[spine.vertices[0]]]

    dist_seq = [cluster.dist[x] for x in spine.vertices]
    for a, b in zip(dist_seq, dist_seq[1:]):
        # orientation never decreases distance, and BFS levels are adjacent
        assert a <= b <= a + 1, "spine distances must climb by at most one"

    m = spine.order
    paths: dict[int, OrderedPath] = {}
    prev_len = None
    for i in range(m):
        x_i = spine.vertices[i]
        trunk = cluster.tree_path(x_i)  # center -> x_i, strictly rising levels
        combined = OrderedPath(trunk + spine.vertices[i + 1 :])
        if prev_len is not None:
            assert prev_len - 1 <= combined.length <= prev_len
        prev_len = combined.length
        paths.setdefault(combined.length, combined)

    cert = DensePairCertificate(
        u=cluster.center,
        v=spine.vertices[-1],
        paths=paths,
        provenance={
            "method": "cluster_spine",
            "center": cluster.center,
            "spine": list(spine.vertices),
            "spine_dists": dist_seq,
            "length_unit": "edges",
        },
    )
    assert cert.max_gap <= 1, "achieved lengths must form a contiguous interval"
    return cert


def is_p_dense(
    g: Graph,
    x: int,
    y: int,
    p: float,
    interval: tuple[float, float],
    caps: OracleCaps | None = None,
) -> bool:
    """Exact gap-density check for the pair (x, y) on ``interval``.

    True iff every subinterval [a', b'] of the interval with b' - a' >= p
    contains an integer ell for which an x-y path of length ell exists.
    Computed by enumerating the exact achievable-length set and checking the
    largest length-free window (boundaries included).
    """
    a, b = interval
    if b < a:
        raise ValueError("interval upper end below lower end")
    achieved = sorted(
        ell for ell in xy_path_lengths(g, x, y, caps) if a <= ell <= b
    )
    if not achieved:
        return b - a < p
    # windows avoiding every achieved length: below the first, between
    # consecutive ones, above the last; the interior ones are open so they
    # only beat p strictly
    if achieved[0] - a > p or b - achieved[-1] > p:
        return False
    return all(nxt - cur <= p for cur, nxt in zip(achieved, achieved[1:]))
