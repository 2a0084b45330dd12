"""Path shortening that preserves endpoints (and optionally a pinned set).

Three tools on an ordered host path:

* ``easy_jump``: bypass a chord found inside a window of 2k+1 consecutive
  vertices; shortens by 1..2k-1 edges.
* ``find_special_sequence``: an increasing position sequence v_1 < ... < v_l
  whose skip edges (v_i, v_{i+1}+1) all exist in the graph; the engine that
  lets two interleaved walkers tile an interval of the path.
* ``jump_with_zigzag``: shorten by 1..4c-3 vertices while keeping both
  endpoints and every pinned vertex, by rerouting between two skip-set
  positions joined by a chord.

All position arithmetic is 0-based on the host ordering.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Digraph, Graph, OrderedPath, validate_path
from .covers import gallai_milgram_cover
from .errors import InternalContradiction, NoChordFound, PancyclicError, PreconditionFailed


@dataclass(frozen=True)
class SpecialSequence:
    """Strictly increasing positions on a host ordering, with one skip edge
    (v_i, v_{i+1}+1) per consecutive pair.

    ``positions`` and ``edges`` index into ``host`` (the ordered vertex
    labels); a singleton sequence has no edges.
    """

    positions: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    host: tuple[int, ...]

    def __post_init__(self):
        if not self.positions:
            raise ValueError("sequence needs at least one position")
        if any(b <= a for a, b in zip(self.positions, self.positions[1:])):
            raise ValueError("positions must strictly increase")
        expected = tuple(
            (a, b + 1) for a, b in zip(self.positions, self.positions[1:])
        )
        if self.edges != expected:
            raise ValueError("edges must be the skip pairs (v_i, v_{i+1}+1)")

    def count_outside(self, excluded: frozenset[int]) -> int:
        return sum(1 for v in self.positions if v not in excluded)


def validate_special_sequence(g: Graph, seq: SpecialSequence) -> bool:
    n = len(seq.host)
    if any(not 0 <= v < n for v in seq.positions):
        return False
    return all(
        b < n and g.has_edge(seq.host[a], seq.host[b]) for a, b in seq.edges
    )


def special_edge_decomposition(g: Graph, host_order) -> list[SpecialSequence]:
    """Decompose a host ordering into maximal special sequences.

    Remove consecutive-position edges, orient everything from low to high
    position (a DAG), and take a minimum path cover.  The cover arcs have
    in/out-degree at most one, and an arc i->j read as a skip edge means
    "special vertex i, followed by special vertex j-1"; so arcs chain exactly
    when one starts at (the other's end) - 1.  The chains are forced, mutually
    non-concatenable, and their vertex sets partition the positions together
    with the leftover singletons, at most one sequence per cover path.
    """
    host = tuple(host_order)
    n = len(host)
    if n == 0:
        raise ValueError("host ordering must be nonempty")
    if len(set(host)) != n:
        raise ValueError("host ordering has repeated vertices")
    arcs = [
        (i, j)
        for i in range(n)
        for j in range(i + 2, n)
        if g.has_edge(host[i], host[j])
    ]
    cover = gallai_milgram_cover(Digraph(n, arcs))
    fsucc: dict[int, int] = {}
    fpred: dict[int, int] = {}
    for p in cover.paths:
        for a, b in zip(p.vertices, p.vertices[1:]):
            fsucc[a] = b
            fpred[b] = a

    chains: list[list[int]] = []
    consumed = 0
    for i in sorted(fsucc):
        if i + 1 in fpred:
            continue  # this arc extends another chain
        specials = [i]
        j = fsucc[i]
        consumed += 1
        while True:
            specials.append(j - 1)
            if j - 1 in fsucc:
                j = fsucc[j - 1]
                consumed += 1
            else:
                break
        chains.append(specials)
    assert consumed == len(fsucc), "every cover arc belongs to exactly one chain"

    covered = {v for chain in chains for v in chain}
    assert len(covered) == sum(len(c) for c in chains), "chains are disjoint"
    sequences = [
        SpecialSequence(
            positions=tuple(chain),
            edges=tuple((a, b + 1) for a, b in zip(chain, chain[1:])),
            host=host,
        )
        for chain in chains
    ]
    for v in range(n):
        if v not in covered:
            sequences.append(SpecialSequence(positions=(v,), edges=(), host=host))
    return sequences


def find_special_sequence(
    g: Graph, host_order, excluded, k: int
) -> SpecialSequence:
    """Best special sequence of the host ordering, judged by how many of its
    positions avoid ``excluded``.

    When the host's independence number is at most k, the decomposition has
    at most 2k sequences, so the winner has at least (n - |excluded|) / (2k)
    positions outside ``excluded``.  Total: degenerate hosts still yield a
    singleton sequence.
    """
    excluded = frozenset(excluded)
    sequences = special_edge_decomposition(g, host_order)
    best = sequences[0]
    best_count = best.count_outside(excluded)
    for seq in sequences[1:]:
        count = seq.count_outside(excluded)
        if count > best_count:
            best, best_count = seq, count
    return best


def easy_jump(g: Graph, p: OrderedPath, k: int) -> OrderedPath:
    """Shorten a path by bypassing a chord inside a 2k+1-vertex window.

    Scans windows from the first endpoint; the first chord found wins.  The
    result keeps both endpoints, uses a subset of the old vertices, and has
    length in [|p| - 2k, |p| - 1].  A graph whose independence number really
    is at most k always has such a chord once |p| > 2k (among 2k+1
    consecutive path vertices, the k+1 even-offset ones cannot all be
    pairwise non-adjacent, and any edge between them is a chord).
    """
    if k < 1:
        raise PreconditionFailed("k must be a positive integer")
    if p.length <= 2 * k:
        raise PreconditionFailed(
            f"path length must exceed 2k: |p|={p.length}, 2k={2 * k}",
            inequality=f"|p| > 2k: {p.length} <= {2 * k}",
        )
    verts = p.vertices
    n = len(verts)
    for s in range(n - 2):
        for t in range(s + 2, min(s + 2 * k, n - 1) + 1):
            if g.has_edge(verts[s], verts[t]):
                return OrderedPath(verts[: s + 1] + verts[t:])
    raise NoChordFound(
        f"no chord with span at most {2 * k} anywhere on the path; "
        f"the independence number of the path's graph must exceed {k}"
    )


def zigzag_precondition(order: int, c: int, pinned_count: int, k: int):
    """Exact integer check of c * ((|P| - (4c-1)|U|) / 2k - 1) > k.

    ``order`` is the number of path vertices.  Returns (holds, rendering).
    """
    lhs = c * (order - (4 * c - 1) * pinned_count)
    rhs = 2 * k * (k + c)
    holds = lhs > rhs
    rendering = (
        f"c*(|P| - (4c-1)*|U|) > 2k*(k+c): "
        f"{c}*({order} - {4 * c - 1}*{pinned_count}) = {lhs} "
        f"{'>' if holds else '<='} {rhs} = 2*{k}*({k}+{c})"
    )
    return holds, rendering


@dataclass(frozen=True)
class ShorteningContext:
    """Bookkeeping for one zigzag shortening attempt on a host path.

    pinned_positions  positions of the pinned vertices
    radius            the shortening radius c
    protected         positions within path distance 2c-1 of a pinned one
    skip_sets         eligible special position v -> (v-1, v-3, ..., v-(2c-1))
    """

    pinned_positions: tuple[int, ...]
    radius: int
    protected: frozenset[int]
    skip_sets: dict[int, tuple[int, ...]]

    def check_invariants(self) -> None:
        c = self.radius
        assert set(self.pinned_positions) <= self.protected
        used: set[int] = set()
        for v, skips in self.skip_sets.items():
            assert len(skips) == c
            assert skips == tuple(v - off for off in range(1, 2 * c, 2))
            assert not set(skips) & set(self.pinned_positions)
            assert not set(skips) & used, "skip sets must be disjoint"
            used.update(skips)


def build_shortening_context(
    p: OrderedPath, c: int, pinned, seq: SpecialSequence
) -> ShorteningContext:
    """Protected zone and skip sets for a special sequence on the path.

    Skip sets exist for every special position that is neither protected nor
    the first of the sequence.  They are pairwise disjoint whenever the
    sequence cleared the early-exit scan (consecutive eligible specials at
    distance >= 2c)."""
    verts = p.vertices
    n = len(verts)
    pos = {v: i for i, v in enumerate(verts)}
    pinned_positions = tuple(sorted(pos[v] for v in pinned))
    protected: set[int] = set()
    for q in pinned_positions:
        protected.update(range(max(0, q - (2 * c - 1)), min(n, q + 2 * c)))
    skip_sets = {
        v: tuple(v - off for off in range(1, 2 * c, 2))
        for v in seq.positions[1:]
        if v not in protected
    }
    return ShorteningContext(
        pinned_positions=pinned_positions,
        radius=c,
        protected=frozenset(protected),
        skip_sets=skip_sets,
    )


def jump_with_zigzag(
    g: Graph, p: OrderedPath, c: int, pinned, k: int
) -> OrderedPath:
    """Shorten a path by 1..4c-3 vertices, preserving endpoints and ``pinned``.

    Refuses to run (``PreconditionFailed``) unless the arithmetic condition
    of ``zigzag_precondition`` holds with |U| = |pinned|; under that
    condition and a true independence bound k, success is guaranteed and
    ``InternalContradiction`` can never fire.

    Construction: protect everything within path distance 2c-1 of a pinned
    vertex, pick a special sequence avoiding the protected zone, and then

    * if two consecutive special positions sit closer than 2c apart, bypass
      the stretch between them with the skip edge (early exit);
    * otherwise give every eligible special position v the skip set
      {v-1, v-3, ..., v-(2c-1)}.  The union has more than k elements, so it
      spans an edge.  An edge inside one skip set is bypassed directly;
      an edge (a, b) across two skip sets is rerouted: follow the path to a,
      take the chord to b, walk back to the left special position along one
      interleaved increasing walker, and continue to the right along the
      other walker, which jumps over the right special position entirely.
    """
    if c < 1:
        raise PreconditionFailed("c must be a positive integer")
    verts = p.vertices
    n = len(verts)
    pinned = frozenset(pinned)
    if not pinned <= set(verts):
        raise PreconditionFailed("pinned vertices must lie on the path")
    holds, rendering = zigzag_precondition(n, c, len(pinned), k)
    if not holds:
        raise PreconditionFailed(
            f"shortening precondition failed: {rendering}", inequality=rendering
        )

    pos = {v: i for i, v in enumerate(verts)}
    protected: set[int] = set()
    for u in pinned:
        q = pos[u]
        protected.update(range(max(0, q - (2 * c - 1)), min(n, q + 2 * c)))
    protected_frozen = frozenset(protected)

    seq = find_special_sequence(g, verts, protected_frozen, k)
    sv = seq.positions

    def finish(result_positions: list[int]) -> OrderedPath:
        out = OrderedPath(tuple(verts[i] for i in result_positions))
        removed = n - out.order
        assert 1 <= removed <= 4 * c - 3, f"removed {removed} vertices"
        assert out.endpoints == p.endpoints
        assert pinned <= set(out.vertices), "pinned vertex dropped"
        assert validate_path(g, out), "shortened path failed validation"
        return out

    # early exit: two consecutive specials closer than 2c, right one eligible
    for i in range(len(sv) - 1):
        if sv[i + 1] not in protected_frozen and sv[i + 1] - sv[i] < 2 * c:
            keep = list(range(sv[i] + 1)) + list(range(sv[i + 1] + 1, n))
            return finish(keep)

    # skip sets for eligible specials (never the first one)
    ctx = build_shortening_context(p, c, pinned, seq)
    ctx.check_invariants()
    owners = {s: v for v, skips in ctx.skip_sets.items() for s in skips}
    skip_positions = sorted(owners)

    chord = None
    for ai in range(len(skip_positions)):
        for bi in range(ai + 1, len(skip_positions)):
            a, b = skip_positions[ai], skip_positions[bi]
            if g.has_edge(verts[a], verts[b]):
                chord = (a, b)
                break
        if chord:
            break
    if chord is None:
        raise InternalContradiction(
            "no edge spans the skip sets; the independence bound k "
            f"= {k} must be violated on the path's vertex set"
        )
    a, b = chord
    if owners[a] == owners[b]:
        # chord inside one skip set: bypass it directly
        keep = list(range(a + 1)) + list(range(b, n))
        return finish(keep)

    v_i, v_j = owners[a], owners[b]
    assert v_i < v_j
    index_of = {v: idx for idx, v in enumerate(sv)}
    i_idx = index_of[v_i]

    def walker(first: int) -> list[int]:
        trail = [v_i, first]
        while trail[-1] != b and trail[-1] != v_j + 1:
            r = trail[-1]
            assert r < v_j + 1, "walker overshot its stop positions"
            t = index_of.get(r)
            if t is not None:
                assert t + 1 < len(sv), "walker jumped past the sequence end"
                trail.append(sv[t + 1] + 1)
            else:
                trail.append(r + 1)
        return trail

    walk_a = walker(v_i + 1)  # starts with the path edge (v_i, v_i + 1)
    walk_b = walker(sv[i_idx + 1] + 1)  # starts with the skip edge of v_i
    if walk_a[-1] == b:
        to_b, onward = walk_a, walk_b
    else:
        to_b, onward = walk_b, walk_a
    assert to_b[-1] == b and onward[-1] == v_j + 1, "walkers must split the stops"

    keep = (
        list(range(a + 1))
        + list(reversed(to_b))
        + onward[1:]
        + list(range(v_j + 2, n))
    )
    return finish(keep)


def shorten_to_target(
    g: Graph, p: OrderedPath, target_lo: int, c: int, pinned, k: int
) -> list[OrderedPath]:
    """Iterate ``jump_with_zigzag`` until the length drops below ``target_lo``.

    Returns the whole chain [p = P_0, P_1, ...]; consecutive lengths differ
    by at most 4c-3, so the shared endpoint pair is (4c-3)-gap-dense over the
    covered range.  A failing step re-raises with the partial chain attached
    as ``partial``.
    """
    chain = [p]
    while chain[-1].length >= target_lo:
        try:
            chain.append(jump_with_zigzag(g, chain[-1], c, pinned, k))
        except PancyclicError as exc:
            if isinstance(exc, PreconditionFailed):
                raise PreconditionFailed(
                    str(exc), inequality=exc.inequality, partial=list(chain)
                ) from exc
            exc.partial = list(chain)
            raise
    return chain
