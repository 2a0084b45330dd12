"""Cycle-spectrum assembly: constructive certificates per length range plus
an exhaustive-oracle fallback, merged into one report with per-length
provenance and a step log.

Desk-scale honesty: every numeric precondition of the constructive pipelines
is evaluated explicitly; a failing step yields ``unknown`` entries naming the
inequality, never a silently weakened claim.  Oracle results are labeled so
constructive coverage is distinguishable from brute-force coverage.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .core import (
    AnalysisParams,
    CycleWitness,
    Graph,
    OrderedPath,
    validate_cycle,
    validate_path,
)
from .dense import DensePairCertificate, find_dense_pair
from .errors import (
    BudgetExceeded,
    InternalContradiction,
    InvalidBank,
    MissingWitness,
    NoChordFound,
    PreconditionFailed,
)
from .oracles import OracleCaps, cycle_of_length, hamilton_cycle
from .report import (
    ABSENT,
    PRESENT,
    UNKNOWN,
    WITNESSED,
    LengthEntry,
    SpectrumReport,
    StepRecord,
    better_entry,
)
from .shortening import (
    easy_jump,
    jump_with_zigzag,
    shorten_to_target,
    zigzag_precondition,
)

RED = "red"
BLUE = "blue"
GREEN = "green"


@dataclass
class RangeFragment:
    """Partial spectrum produced by one range pipeline."""

    entries: dict[int, LengthEntry] = field(default_factory=dict)
    steps: list[StepRecord] = field(default_factory=list)
    flags: list[str] = field(default_factory=list)


def _witnessed(w: CycleWitness, source: str, provenance: str) -> LengthEntry:
    return LengthEntry(
        status=WITNESSED, witness=w, source=source, provenance=provenance
    )


def cycle_to_path(cycle: CycleWitness) -> OrderedPath:
    """Spanning path of the cycle: rotate to the minimum label and keep the
    stored orientation, so the path endpoints are joined by a cycle edge."""
    return OrderedPath(cycle.rotated_to_min().vertices)


def _close_cycle(g: Graph, p: OrderedPath) -> CycleWitness:
    cyc = CycleWitness(p.vertices)
    assert validate_cycle(g, cyc), "endpoints of a cut cycle must stay adjacent"
    return cyc


# --- path banks ---------------------------------------------------------------


@dataclass(frozen=True)
class PathBank:
    """Cyclically arranged anchor vertices with, per consecutive anchor pair,
    one internally-disjoint witness path per achievable length.

    ``legs[i]`` maps length -> path from anchors[i] to anchors[(i+1) % t];
    interiors of different legs must be disjoint so that picking one path per
    leg always closes into a simple cycle.
    """

    anchors: tuple[int, ...]
    legs: tuple[dict[int, OrderedPath], ...]


def validate_path_bank(g: Graph, bank: PathBank) -> None:
    """Raise ``InvalidBank`` on any structural violation."""
    t = len(bank.anchors)
    if t < 2:
        raise InvalidBank("a bank needs at least two anchors")
    if len(set(bank.anchors)) != t:
        raise InvalidBank("anchors must be distinct")
    if len(bank.legs) != t:
        raise InvalidBank("one leg per anchor pair required")
    anchor_set = set(bank.anchors)
    interiors: list[set[int]] = []
    for i, leg in enumerate(bank.legs):
        if not leg:
            raise InvalidBank(f"leg {i} has no paths")
        src = bank.anchors[i]
        dst = bank.anchors[(i + 1) % t]
        interior: set[int] = set()
        for ell, path in leg.items():
            if path.length != ell:
                raise InvalidBank(f"leg {i}: path keyed {ell} has length {path.length}")
            if path.vertices[0] != src or path.vertices[-1] != dst:
                raise InvalidBank(f"leg {i}: path endpoints are not ({src}, {dst})")
            if not validate_path(g, path):
                raise InvalidBank(f"leg {i}: path for length {ell} is not a path of g")
            inner = set(path.vertices[1:-1])
            if inner & anchor_set:
                raise InvalidBank(f"leg {i}: interior touches an anchor")
            interior |= inner
        interiors.append(interior)
    for i in range(t):
        for j in range(i + 1, t):
            if interiors[i] & interiors[j]:
                raise InvalidBank(f"legs {i} and {j} share interior vertices")


def combine_banks(g: Graph, bank: PathBank) -> dict[int, CycleWitness]:
    """One witness cycle per achievable total length (one path per leg).

    The achievable totals are exactly the sumset of the legs' length sets;
    totals below 3 admit no simple cycle and are skipped.
    """
    validate_path_bank(g, bank)
    partial: dict[int, tuple[int, ...]] = {0: ()}
    for leg in bank.legs:
        nxt: dict[int, tuple[int, ...]] = {}
        for total in sorted(partial):
            for ell in sorted(leg):
                nxt.setdefault(total + ell, partial[total] + (ell,))
        partial = nxt
    out: dict[int, CycleWitness] = {}
    for total in sorted(partial):
        if total < 3:
            continue
        seq: list[int] = []
        for i, ell in enumerate(partial[total]):
            seq.extend(bank.legs[i][ell].vertices[:-1])
        cyc = CycleWitness(tuple(seq))
        assert validate_cycle(g, cyc) and cyc.length == total
        out[total] = cyc
    return out


# --- cycle + matched set decomposition ----------------------------------------


@dataclass(frozen=True)
class MatchingCycleDecomposition:
    """Partition of the vertex set into a cycle and a matched-off set.

    Every ejected vertex x carries a matching edge back to ``matching[x]``,
    which still lies on the cycle; matched cycle endpoints are all distinct.
    """

    cycle: CycleWitness
    s_set: frozenset[int]
    matching: dict[int, int]

    @property
    def matched_endpoints(self) -> frozenset[int]:
        return frozenset(self.matching.values())


def validate_matching_cycle(g: Graph, dec: MatchingCycleDecomposition) -> bool:
    on_cycle = set(dec.cycle.vertices)
    if on_cycle & dec.s_set:
        return False
    if on_cycle | dec.s_set != set(range(g.n)):
        return False
    if set(dec.matching) != set(dec.s_set):
        return False
    ends = list(dec.matching.values())
    if len(set(ends)) != len(ends) or not set(ends) <= on_cycle:
        return False
    if any(not g.has_edge(x, mx) for x, mx in dec.matching.items()):
        return False
    return validate_cycle(g, dec.cycle)


def partition_into_matching_cycle(
    g: Graph,
    k: int,
    eps: float,
    ham: CycleWitness | None = None,
    caps: OracleCaps | None = None,
) -> MatchingCycleDecomposition:
    """Eject floor(eps*n/20) vertices from a Hamilton cycle one at a time,
    each keeping a matching edge to its former cycle neighbor.

    Every step pins the matched endpoints and their current cycle neighbors,
    then shortens by exactly one vertex; the zigzag precondition is checked
    per step and a failure raises ``PreconditionFailed`` carrying the partial
    decomposition built so far.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    if ham is None:
        ham = hamilton_cycle(g, caps)
    if ham is None:
        raise PreconditionFailed("graph is not Hamiltonian")
    assert validate_cycle(g, ham) and ham.length == g.n
    target = math.floor(eps * g.n / 20)
    cycle = ham
    matching: dict[int, int] = {}
    for _ in range(target):
        ends = set(matching.values())
        cyc_vs = cycle.vertices
        m = len(cyc_vs)
        pinned = set(ends)
        for i, v in enumerate(cyc_vs):
            if v in ends:
                pinned.add(cyc_vs[(i - 1) % m])
                pinned.add(cyc_vs[(i + 1) % m])
        holds, rendering = zigzag_precondition(m, 1, len(pinned), k)
        if not holds:
            raise PreconditionFailed(
                f"ejection step {len(matching) + 1}: {rendering}",
                inequality=rendering,
                partial=MatchingCycleDecomposition(
                    cycle=cycle, s_set=frozenset(matching), matching=dict(matching)
                ),
            )
        path = cycle_to_path(cycle)
        shorter = jump_with_zigzag(g, path, 1, frozenset(pinned), k)
        (dropped,) = set(path.vertices) - set(shorter.vertices)
        assert dropped not in pinned
        partner = cyc_vs[(cyc_vs.index(dropped) + 1) % m]
        assert partner not in ends
        matching[dropped] = partner
        cycle = _close_cycle(g, shorter)
    dec = MatchingCycleDecomposition(
        cycle=cycle, s_set=frozenset(matching), matching=matching
    )
    assert validate_matching_cycle(g, dec)
    return dec


# --- induced increasing paths and chord density -------------------------------


def find_induced_increasing_path(
    g: Graph,
    segment: OrderedPath,
    endpoint: int,
    target_len: int,
    caps: OracleCaps | None = None,
) -> OrderedPath | None:
    """Induced path of exactly ``target_len`` edges, increasing along the
    segment order and ending at ``endpoint`` (the segment's last vertex).

    Exhaustive backwards search; ``None`` proves absence.  Raises
    ``BudgetExceeded`` when the node budget runs out.
    """
    caps = caps if caps is not None else OracleCaps()
    verts = segment.vertices
    if verts[-1] != endpoint:
        raise ValueError("endpoint must be the segment's last vertex")
    if target_len < 1:
        raise ValueError("target length must be positive")
    if target_len + 1 > len(verts):
        return None
    budget = caps.dfs_node_budget
    nodes = 0
    chosen = [len(verts) - 1]

    def down(remaining: int) -> bool:
        nonlocal nodes
        if remaining == 0:
            return True
        for cand in range(chosen[-1] - 1, -1, -1):
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded("induced-path search budget exhausted")
            v = verts[cand]
            if not g.has_edge(v, verts[chosen[-1]]):
                continue
            if any(g.has_edge(v, verts[c]) for c in chosen[:-1]):
                continue  # would create a chord: not induced
            chosen.append(cand)
            if down(remaining - 1):
                return True
            chosen.pop()
        return False

    if down(target_len):
        return OrderedPath(tuple(verts[i] for i in reversed(chosen)))
    return None


def chord_dense_endpoints(
    g: Graph, segment: OrderedPath, window: int
) -> DensePairCertificate:
    """Repeatedly bypass a chord among the trailing window+2 vertices,
    recording one path per reached length, until the length is at most
    ``window``.

    Consecutive recorded lengths differ by at most ``window``.  If some
    trailing stretch is chordless the search raises ``NoChordFound`` carrying
    that stretch (an induced increasing path): a genuine finding, not an
    error of the certificate.
    """
    if window < 1:
        raise ValueError("window must be a positive integer")
    current = segment
    paths = {current.length: current}
    while current.length > window:
        verts = current.vertices
        m = len(verts)
        zone = max(0, m - (window + 2))
        chord = None
        for s in range(zone, m - 2):
            for t in range(s + 2, m):
                if g.has_edge(verts[s], verts[t]):
                    chord = (s, t)
                    break
            if chord:
                break
        if chord is None:
            raise NoChordFound(
                f"trailing {m - zone} vertices are chordless",
                induced_path=OrderedPath(verts[zone:]),
            )
        s, t = chord
        current = OrderedPath(verts[: s + 1] + verts[t:])
        assert segment.length - current.length >= 1
        paths.setdefault(current.length, current)
    cert = DensePairCertificate(
        u=segment.vertices[0],
        v=segment.vertices[-1],
        paths=paths,
        provenance={"method": "chord_bypass", "window": window},
    )
    lengths = cert.lengths
    assert all(b - a <= window for a, b in zip(lengths, lengths[1:]))
    return cert


# --- segment triples and the three-colored pair graph -------------------------


@dataclass(frozen=True)
class SegmentTriple:
    """An induced increasing path split into three equal consecutive thirds;
    the anchor (a matched cycle endpoint) is the last vertex, inside q1."""

    path: OrderedPath
    q3: tuple[int, ...]
    q2: tuple[int, ...]
    q1: tuple[int, ...]

    @property
    def anchor(self) -> int:
        return self.path.vertices[-1]


def segment_triple(path: OrderedPath) -> SegmentTriple:
    if path.order % 3:
        raise ValueError("triple needs a vertex count divisible by three")
    s = path.order // 3
    v = path.vertices
    return SegmentTriple(path=path, q3=v[:s], q2=v[s : 2 * s], q1=v[2 * s :])


def validate_segment_triple(g: Graph, triple: SegmentTriple) -> bool:
    v = triple.path.vertices
    if triple.q3 + triple.q2 + triple.q1 != v:
        return False
    if len({len(triple.q1), len(triple.q2), len(triple.q3)}) != 1:
        return False
    if not validate_path(g, triple.path):
        return False
    # induced: no edges besides the consecutive ones
    for i in range(len(v)):
        for j in range(i + 2, len(v)):
            if g.has_edge(v[i], v[j]):
                return False
    return True


@dataclass(frozen=True)
class TriColoredGraph:
    """Complete graph on triple indices, each pair colored red, blue or green.

    red:   both q1-q1 and q3-q3 cross edges exist (witnesses stored)
    blue:  no q1-q1 cross edge at all
    green: q1-q1 exists but q3-q3 does not
    """

    r: int
    colors: dict[tuple[int, int], str]
    witnesses: dict[tuple[int, int], tuple[tuple[int, int], tuple[int, int]]]

    def color(self, i: int, j: int) -> str:
        return self.colors[(min(i, j), max(i, j))]


def _first_cross_edge(g: Graph, left: tuple[int, ...], right: tuple[int, ...]):
    for u in left:
        for v in right:
            if g.has_edge(u, v):
                return (u, v)
    return None


def build_tricolored(g: Graph, triples: list[SegmentTriple]) -> TriColoredGraph:
    seen: set[int] = set()
    for t in triples:
        if seen & set(t.path.vertices):
            raise ValueError("triples must be pairwise vertex-disjoint")
        seen.update(t.path.vertices)
    colors: dict[tuple[int, int], str] = {}
    witnesses: dict[tuple[int, int], tuple] = {}
    for i in range(len(triples)):
        for j in range(i + 1, len(triples)):
            e1 = _first_cross_edge(g, triples[i].q1, triples[j].q1)
            e3 = _first_cross_edge(g, triples[i].q3, triples[j].q3)
            if e1 is not None and e3 is not None:
                colors[(i, j)] = RED
                witnesses[(i, j)] = (e1, e3)
            elif e1 is None:
                colors[(i, j)] = BLUE
            else:
                colors[(i, j)] = GREEN
    return TriColoredGraph(r=len(triples), colors=colors, witnesses=witnesses)


def find_red_clique(
    h: TriColoredGraph, size: int, caps: OracleCaps | None = None
) -> tuple[int, ...] | None:
    """Exhaustive search for a red clique of the requested size.

    ``None`` means no such clique exists (the search completed); the node
    budget guards pathological instances via ``BudgetExceeded``.
    """
    if size < 1:
        raise ValueError("size must be positive")
    caps = caps if caps is not None else OracleCaps()
    red = [0] * h.r
    for (i, j), color in h.colors.items():
        if color == RED:
            red[i] |= 1 << j
            red[j] |= 1 << i
    budget = caps.dfs_node_budget
    nodes = 0

    def grow(clique: list[int], cand: int, start: int) -> bool:
        nonlocal nodes
        if len(clique) == size:
            return True
        for v in range(start, h.r):
            if not cand & (1 << v):
                continue
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded("red-clique search budget exhausted")
            if len(clique) + 1 + bin(cand >> (v + 1)).count("1") < size:
                return False  # candidates are scanned in ascending order
            clique.append(v)
            if grow(clique, cand & red[v], v + 1):
                return True
            clique.pop()
        return False

    found: list[int] = []
    if grow(found, (1 << h.r) - 1, 0):
        return tuple(found)
    return None


def zigzag_dense_q(
    g: Graph,
    triples: list[SegmentTriple],
    witnesses: dict[tuple[int, int], tuple[tuple[int, int], tuple[int, int]]],
    ) -> DensePairCertificate:
    """Endpoint-density certificate built from an all-red family of triples.

    ``triples`` must be ordered by anchor position and pairwise disjoint;
    ``witnesses[(i, j)]`` holds the (q1-q1, q3-q3) cross edges for i < j
    (indices into ``triples``).  A running path enters each triple on one
    side, crosses its middle third, and leaves on the other side; completing
    the run to the last anchor at stage i gives paths whose consecutive
    lengths differ by at most |Q_i| + |Q_{i+1}| + |Q_last| vertices.

    Raises ``MissingWitness`` when a needed cross edge is absent.
    """
    if not triples:
        raise ValueError("need at least one triple")
    last = len(triples) - 1
    z = triples[0].path.vertices[0]
    if last == 0:
        p = triples[0].path
        return DensePairCertificate(
            u=z,
            v=triples[0].anchor,
            paths={p.length: p},
            provenance={"method": "zigzag_run", "triples": 1},
        )

    def edge_for(i: int, j: int, side: str) -> tuple[int, int]:
        pair = witnesses.get((i, j))
        if pair is None:
            raise MissingWitness(f"no witness edges recorded for pair ({i}, {j})")
        edge = pair[0] if side == "q1" else pair[1]
        u, v = edge
        left = triples[i].q1 if side == "q1" else triples[i].q3
        right = triples[j].q1 if side == "q1" else triples[j].q3
        if u in right and v in left:
            u, v = v, u
        if u not in left or v not in right:
            raise MissingWitness(
                f"witness {edge} does not join the {side} thirds of pair ({i}, {j})"
            )
        return (u, v)

    def along(triple: SegmentTriple, frm: int, to: int) -> tuple[int, ...]:
        vs = triple.path.vertices
        a, b = vs.index(frm), vs.index(to)
        return vs[a : b + 1] if a <= b else tuple(reversed(vs[b : a + 1]))

    run: tuple[int, ...] = (z,)
    side = "q3"  # the first vertex of an increasing triple sits in q3
    completions: list[OrderedPath] = []
    for i in range(last):
        other = "q1" if side == "q3" else "q3"
        # completion: run -> across triple i -> straight to the last anchor
        u, v = edge_for(i, last, other)
        completion = (
            run
            + along(triples[i], run[-1], u)[1:]
            + along(triples[last], v, triples[last].anchor)
        )
        completions.append(OrderedPath(completion))
        if i < last - 1:
            u, v = edge_for(i, i + 1, other)
            run = run + along(triples[i], run[-1], u)[1:] + (v,)
            side = other

    paths: dict[int, OrderedPath] = {}
    for p in completions:
        assert validate_path(g, p)
        paths.setdefault(p.length, p)
    cert = DensePairCertificate(
        u=z,
        v=triples[last].anchor,
        paths=paths,
        provenance={"method": "zigzag_run", "triples": len(triples)},
    )
    lengths = [p.length for p in completions]
    for i in range(len(lengths) - 1):
        bound = (
            triples[i].path.order
            + triples[i + 1].path.order
            + triples[last].path.order
        )
        if abs(lengths[i + 1] - lengths[i]) > bound:
            raise InternalContradiction(
                f"completion lengths jumped by {abs(lengths[i + 1] - lengths[i])}"
                f" > {bound}"
            )
    return cert

# --- range pipelines ----------------------------------------------------------


def _cycle_complete_bound(ell: int, s: int) -> float:
    """Vertex count beyond which a graph free of both C_ell and an
    independent s-set cannot exist (classical cycle-complete bound)."""
    x = (ell - 1) // 2
    return ((ell - 2) * (s ** (1 / x) + 2) + 1) * (s - 1)


def lower_range_certificates(
    g: Graph, k: int, eps: float, caps: OracleCaps | None = None
) -> RangeFragment:
    """Short lengths, certified by direct bounded search.

    Covers ell in [3, ceil((2+eps)*k)] clipped to [3, n].  Every absence is
    cross-checked against the numeric cycle-complete bound for (C_ell, K_{k+1});
    a graph that is large enough for that bound yet misses C_ell cannot have
    independence number k, so such an absence raises a flag.
    """
    if eps < 0:
        raise ValueError("eps must be nonnegative")
    frag = RangeFragment()
    hi = min(g.n, math.ceil((2 + eps) * k))
    frag.steps.append(
        StepRecord(
            name="lower_range",
            inequality=f"range [3, min(n, ceil((2+eps)k))] = [3, {hi}]",
            outcome="ok",
        )
    )
    for ell in range(3, hi + 1):
        try:
            w = cycle_of_length(g, ell, caps)
        except BudgetExceeded as exc:
            frag.entries[ell] = LengthEntry(
                status=UNKNOWN,
                source="cycle_of_length",
                provenance="lower_range",
                detail=str(exc),
            )
            continue
        if w is not None:
            frag.entries[ell] = LengthEntry(
                status=PRESENT,
                witness=w,
                source="cycle_of_length",
                provenance="lower_range",
            )
        else:
            frag.entries[ell] = LengthEntry(
                status=ABSENT, source="cycle_of_length", provenance="lower_range"
            )
            bound = _cycle_complete_bound(ell, k + 1)
            if g.n >= bound:
                frag.flags.append(
                    f"length {ell} is absent although n={g.n} meets the "
                    f"cycle-complete bound {bound:.1f} for (C_{ell}, K_{k + 1}); "
                    f"the claimed independence bound k={k} must be wrong"
                )
    return frag


def _chain_down(
    g: Graph, ham: CycleWitness, k: int, stop_at: int, provenance: str
) -> tuple[dict[int, LengthEntry], list[StepRecord]]:
    """Shorten a Hamilton cycle one vertex at a time down to ``stop_at``."""
    entries = {
        ham.length: _witnessed(ham, source="hamilton_cycle", provenance=provenance)
    }
    steps: list[StepRecord] = []
    current = ham
    while current.length > max(stop_at, 3):
        holds, rendering = zigzag_precondition(current.length, 1, 0, k)
        if not holds:
            steps.append(
                StepRecord(name=f"{provenance}:shorten", inequality=rendering,
                           outcome="failed")
            )
            break
        shorter = jump_with_zigzag(g, cycle_to_path(current), 1, frozenset(), k)
        current = _close_cycle(g, shorter)
        entries[current.length] = _witnessed(
            current, source="jump_with_zigzag", provenance=provenance
        )
    steps.append(
        StepRecord(
            name=f"{provenance}:chain",
            inequality=f"reached length {current.length} from {ham.length}",
            outcome="ok",
        )
    )
    return entries, steps


def _through_matched_pair(
    m_y: int, m_x: int, s_paths: dict[int, OrderedPath]
) -> dict[int, OrderedPath]:
    """Leg from m_y to m_x: matching edge, a path inside the ejected set
    (given as x->y paths), and the other matching edge."""
    leg: dict[int, OrderedPath] = {}
    for ell, p in sorted(s_paths.items()):
        full = OrderedPath((m_y,) + tuple(reversed(p.vertices)) + (m_x,))
        leg.setdefault(full.length, full)
    return leg


def upper_range_certificates(
    g: Graph,
    k: int,
    eps: float,
    ham: CycleWitness | None = None,
    caps: OracleCaps | None = None,
) -> RangeFragment:
    """Long lengths.

    (a) shorten a Hamilton cycle one vertex at a time: every length in
        [2k^2 + 2k, n] gets an explicit witness;
    (b) eject a matched set, pick the cycle interval richest in matched
        endpoints, find a dense pair inside its ejected partners, shorten the
        long complementary arc with radius floor(eps^2*k/400), and combine.

    Every numeric gate of (b) is logged; at small scale (b) typically stops
    at its radius gate and contributes nothing, which is the honest outcome.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    frag = RangeFragment()
    if ham is None:
        ham = hamilton_cycle(g, caps)
    if ham is None:
        raise PreconditionFailed("graph is not Hamiltonian")
    entries, steps = _chain_down(
        g, ham, k, 2 * k * k + 2 * k, provenance="upper_range_chain"
    )
    frag.entries.update(entries)
    frag.steps.extend(steps)
    frag.entries.update(_upper_pipeline_b(g, k, eps, ham, caps, frag.steps))
    return frag


def _upper_pipeline_b(
    g: Graph,
    k: int,
    eps: float,
    ham: CycleWitness,
    caps: OracleCaps | None,
    steps: list[StepRecord],
) -> dict[int, LengthEntry]:
    n = g.n
    try:
        dec = partition_into_matching_cycle(g, k, eps, ham=ham, caps=caps)
    except PreconditionFailed as exc:
        steps.append(
            StepRecord(name="upper_b:matching_cycle", inequality=exc.inequality,
                       outcome="failed")
        )
        return {}
    steps.append(
        StepRecord(
            name="upper_b:matching_cycle",
            inequality=f"|S| = floor(eps*n/20) = {len(dec.s_set)}",
            outcome="ok",
        )
    )
    if not dec.s_set:
        steps.append(
            StepRecord(name="upper_b:pool", inequality="|S| >= 1: 0 < 1",
                       outcome="failed")
        )
        return {}
    pieces = math.floor(4 / eps)
    if pieces < 1:
        steps.append(
            StepRecord(name="upper_b:intervals",
                       inequality=f"floor(4/eps) = {pieces} >= 1", outcome="failed")
        )
        return {}
    cyc = dec.cycle.rotated_to_min()
    pos = {v: i for i, v in enumerate(cyc.vertices)}
    bounds = [(j * cyc.length) // pieces for j in range(pieces + 1)]
    counts = [0] * pieces
    for x in dec.s_set:
        p = pos[dec.matching[x]]
        for j in range(pieces):
            if bounds[j] <= p < bounds[j + 1]:
                counts[j] += 1
                break
    best_j = max(range(pieces), key=lambda j: (counts[j], -j))
    need = max(2, math.floor(eps * eps * n / 80))
    outcome = "ok" if counts[best_j] >= need else "failed"
    steps.append(
        StepRecord(
            name="upper_b:pigeonhole",
            inequality=(
                f"max interval endpoint count {counts[best_j]} >= "
                f"max(2, floor(eps^2*n/80)) = {need}"
            ),
            outcome=outcome,
        )
    )
    if outcome == "failed":
        return {}
    chosen = sorted(
        x
        for x in dec.s_set
        if bounds[best_j] <= pos[dec.matching[x]] < bounds[best_j + 1]
    )
    sub, back = g.induced(chosen)
    cert = find_dense_pair(sub, AnalysisParams(k=k, gamma=0.01))
    x_s, y_s = back[cert.u], back[cert.v]
    if x_s == y_s:
        steps.append(
            StepRecord(name="upper_b:dense_pair",
                       inequality="dense pair degenerated to one vertex",
                       outcome="failed")
        )
        return {}
    s_paths = {
        ell: OrderedPath(tuple(back[v] for v in p.vertices))
        for ell, p in cert.paths.items()
    }
    c_val = math.floor(eps * eps * k / 400)
    outcome = "ok" if c_val >= 1 else "failed"
    steps.append(
        StepRecord(
            name="upper_b:radius",
            inequality=f"c = floor(eps^2*k/400) = {c_val} >= 1",
            outcome=outcome,
        )
    )
    if outcome == "failed":
        return {}
    m_x, m_y = dec.matching[x_s], dec.matching[y_s]
    i, j = sorted((pos[m_x], pos[m_y]))
    arc_in = cyc.vertices[i : j + 1]
    arc_out = cyc.vertices[j:] + cyc.vertices[: i + 1]
    arc = arc_in if len(arc_in) >= len(arc_out) else arc_out
    if arc[0] != m_x:
        arc = tuple(reversed(arc))
    target = max(3, math.floor(900 * k / eps**2))
    try:
        chain = shorten_to_target(g, OrderedPath(arc), target, c_val, frozenset(), k)
    except PreconditionFailed as exc:
        steps.append(
            StepRecord(name="upper_b:shorten", inequality=exc.inequality,
                       outcome="failed")
        )
        return {}
    leg1 = {}
    for p in chain:
        leg1.setdefault(p.length, p)
    bank = PathBank(
        anchors=(m_x, m_y), legs=(leg1, _through_matched_pair(m_y, m_x, s_paths))
    )
    cycles = combine_banks(g, bank)
    steps.append(
        StepRecord(
            name="upper_b:combine",
            inequality=f"{len(cycles)} lengths combined",
            outcome="ok",
        )
    )
    return {
        ell: _witnessed(w, source="combine_banks", provenance="upper_range_bank")
        for ell, w in cycles.items()
    }


def cycle_n_minus_1(
    g: Graph,
    k: int,
    ham: CycleWitness | None = None,
    caps: OracleCaps | None = None,
) -> CycleWitness:
    """One cycle of length exactly n-1, for Hamiltonian graphs with
    n > 2k^2 + 2k: shorten a Hamilton path by one vertex and close it with
    the cycle edge joining its endpoints."""
    n = g.n
    if n <= 2 * k * k + 2 * k:
        raise PreconditionFailed(
            f"need n > 2k^2 + 2k: {n} <= {2 * k * k + 2 * k}",
            inequality=f"n > 2k^2+2k: {n} <= {2 * k * k + 2 * k}",
        )
    if ham is None:
        ham = hamilton_cycle(g, caps)
    if ham is None:
        raise PreconditionFailed("graph is not Hamiltonian")
    assert validate_cycle(g, ham) and ham.length == n
    shorter = jump_with_zigzag(g, cycle_to_path(ham), 1, frozenset(), k)
    out = _close_cycle(g, shorter)
    assert out.length == n - 1
    return out


# --- middle range --------------------------------------------------------------


@dataclass(frozen=True)
class _PoolPair:
    """One extracted pair: ejected vertices x_s, y_s with their matched cycle
    endpoints (position of m_x before m_y) and x->y paths inside the ejected
    set, one per achieved length."""

    x_s: int
    y_s: int
    m_x: int
    m_y: int
    s_paths: dict[int, OrderedPath]


def _arc_easy_jump_leg(
    g: Graph, arc: tuple[int, ...], k: int
) -> dict[int, OrderedPath]:
    """Every length reached while chord-jumping an arc down to at most 2k
    edges; keys are lengths, paths keep the arc's endpoint order."""
    current = OrderedPath(arc)
    leg = {current.length: current}
    while current.length > 2 * k:
        current = easy_jump(g, current, k)
        leg.setdefault(current.length, current)
    return leg


def _reversed_leg(paths: dict[int, OrderedPath]) -> dict[int, OrderedPath]:
    return {ell: p.reversed() for ell, p in paths.items()}


def _claim_closure(
    g: Graph,
    cyc: CycleWitness,
    pos: dict[int, int],
    pair: _PoolPair,
    q: int,
    window: int,
    k: int,
    steps: list[StepRecord],
) -> dict[int, LengthEntry]:
    """Close the middle range when some interval before a matched endpoint
    has no long induced increasing path: its endpoints are then chord-dense,
    the rest of the cycle collapses to a short path by chord jumps, and the
    ejected set supplies the third leg."""
    assert pos[pair.m_x] >= q, "interval must fit before the matched endpoint"
    seg = OrderedPath(cyc.vertices[pos[pair.m_x] - q : pos[pair.m_x] + 1])
    dense_cert = chord_dense_endpoints(g, seg, window)
    w = seg.vertices[0]
    arc = cyc.vertices[pos[pair.m_y] :] + cyc.vertices[: pos[pair.m_x] - q + 1]
    try:
        arc_leg = _arc_easy_jump_leg(g, arc, k)
    except NoChordFound as exc:
        steps.append(
            StepRecord(name="middle:claim_arc", inequality=str(exc), outcome="failed")
        )
        return {}
    bank = PathBank(
        anchors=(pair.m_x, w, pair.m_y),
        legs=(
            _reversed_leg(dense_cert.paths),
            _reversed_leg(arc_leg),
            _through_matched_pair(pair.m_y, pair.m_x, pair.s_paths),
        ),
    )
    cycles = combine_banks(g, bank)
    steps.append(
        StepRecord(
            name="middle:claim_combine",
            inequality=f"{len(cycles)} lengths combined",
            outcome="ok",
        )
    )
    return {
        ell: _witnessed(wit, source="combine_banks", provenance="middle_range_claim")
        for ell, wit in cycles.items()
    }


def _zigzag_closure(
    g: Graph,
    cyc: CycleWitness,
    pos: dict[int, int],
    clique_triples: list[SegmentTriple],
    clique_witnesses: dict[tuple[int, int], tuple],
    last_pair: _PoolPair,
    k: int,
    steps: list[StepRecord],
) -> dict[int, LengthEntry]:
    """Close the middle range through an all-red triple family: a zigzag run
    makes one endpoint pair dense, the backward arc collapses by chord jumps,
    and the ejected set supplies the third leg."""
    zig = zigzag_dense_q(g, clique_triples, clique_witnesses)
    z = zig.u
    arc = tuple(reversed(cyc.vertices[: pos[z] + 1])) + tuple(
        reversed(cyc.vertices[pos[last_pair.m_y] :])
    )
    try:
        arc_leg = _arc_easy_jump_leg(g, arc, k)
    except NoChordFound as exc:
        steps.append(
            StepRecord(name="middle:zigzag_arc", inequality=str(exc), outcome="failed")
        )
        return {}
    bank = PathBank(
        anchors=(z, last_pair.m_y, last_pair.m_x),
        legs=(
            arc_leg,
            _through_matched_pair(last_pair.m_y, last_pair.m_x, last_pair.s_paths),
            _reversed_leg(zig.paths),
        ),
    )
    cycles = combine_banks(g, bank)
    steps.append(
        StepRecord(
            name="middle:zigzag_combine",
            inequality=f"{len(cycles)} lengths combined",
            outcome="ok",
        )
    )
    return {
        ell: _witnessed(wit, source="combine_banks", provenance="middle_range_zigzag")
        for ell, wit in cycles.items()
    }


def _extract_pools(
    g: Graph,
    kept: list[int],
    matching: dict[int, int],
    pos: dict[int, int],
    t: int,
    k: int,
    eps: float,
    steps: list[StepRecord],
) -> list[_PoolPair]:
    lo_req = max(1, math.ceil(eps * k / 100))
    hi_req = math.floor(eps * k / 50)
    pool: list[_PoolPair] = []
    remaining = sorted(kept)
    for i in range(t):
        if len(remaining) < 2:
            steps.append(
                StepRecord(
                    name="middle:pool_shortfall",
                    inequality=f"extracted {len(pool)} of t = {t} pairs",
                    outcome="failed",
                )
            )
            break
        sub, back = g.induced(remaining)
        cert = find_dense_pair(sub, AnalysisParams(k=k, gamma=0.01))
        x_s, y_s = back[cert.u], back[cert.v]
        if x_s == y_s:
            steps.append(
                StepRecord(
                    name="middle:pool_degenerate",
                    inequality=f"pair {i + 1} degenerated to one vertex",
                    outcome="failed",
                )
            )
            break
        covered = lo_req <= hi_req and cert.lo <= lo_req and hi_req <= cert.hi
        steps.append(
            StepRecord(
                name="middle:pool_interval",
                inequality=(
                    f"pair {i + 1} achieves [{cert.lo}, {cert.hi}] covering "
                    f"[ceil(eps*k/100), floor(eps*k/50)] = [{lo_req}, {hi_req}]"
                ),
                outcome="ok" if covered else "failed",
            )
        )
        if not covered:
            break
        s_paths = {
            ell: OrderedPath(tuple(back[v] for v in p.vertices))
            for ell, p in cert.paths.items()
        }
        m_x, m_y = matching[x_s], matching[y_s]
        if pos[m_x] > pos[m_y]:
            x_s, y_s, m_x, m_y = y_s, x_s, m_y, m_x
            s_paths = _reversed_leg(s_paths)
        pool.append(_PoolPair(x_s=x_s, y_s=y_s, m_x=m_x, m_y=m_y, s_paths=s_paths))
        remaining = [v for v in remaining if v not in (x_s, y_s)]
    return pool


def _middle_constructive(
    g: Graph,
    k: int,
    eps: float,
    dec: MatchingCycleDecomposition,
    ham: CycleWitness,
    steps: list[StepRecord],
    caps: OracleCaps | None,
) -> dict[int, LengthEntry]:
    n = g.n
    # rotation: position 0 is the caller's Hamilton start while it survives
    on_cycle = set(dec.cycle.vertices)
    start = ham.vertices[0] if ham.vertices[0] in on_cycle else min(on_cycle)
    vs = dec.cycle.vertices
    at = vs.index(start)
    cyc = CycleWitness(vs[at:] + vs[:at])
    pos = {v: i for i, v in enumerate(cyc.vertices)}

    q = math.floor(1000 * k / eps**2)
    ok = 1 <= q < cyc.length
    steps.append(
        StepRecord(
            name="middle:interval_length",
            inequality=f"1 <= q = floor(1000k/eps^2) = {q} < |C| = {cyc.length}",
            outcome="ok" if ok else "failed",
        )
    )
    if not ok:
        return {}

    kept = [x for x in dec.s_set if pos[dec.matching[x]] >= q]
    need_kept = max(2, math.floor(eps * n / 22))
    ok = len(kept) >= need_kept
    steps.append(
        StepRecord(
            name="middle:trimmed_pool",
            inequality=(
                f"|S after trim| = {len(kept)} >= max(2, floor(eps*n/22)) = {need_kept}"
            ),
            outcome="ok" if ok else "failed",
        )
    )
    if not ok:
        return {}

    t = math.floor(eps * k * k / 40)
    ok = t >= 1
    steps.append(
        StepRecord(
            name="middle:pool_count",
            inequality=f"t = floor(eps*k^2/40) = {t} >= 1",
            outcome="ok" if ok else "failed",
        )
    )
    if not ok:
        return {}

    pool = _extract_pools(g, kept, dec.matching, pos, t, k, eps, steps)
    if not pool:
        return {}

    # pairwise-disjoint pre-anchor intervals, greedy by right endpoint
    pool = sorted(pool, key=lambda pr: pos[pr.m_x])
    selected: list[_PoolPair] = []
    frontier = -1
    for pr in pool:
        lo_pos = pos[pr.m_x] - q
        if lo_pos > frontier:
            selected.append(pr)
            frontier = pos[pr.m_x]
    steps.append(
        StepRecord(
            name="middle:disjoint_intervals",
            inequality=f"selected {len(selected)} disjoint intervals of {len(pool)}",
            outcome="ok" if selected else "failed",
        )
    )
    if not selected:
        return {}

    target_len = math.floor(eps**3 * k)
    ok = target_len >= 2
    steps.append(
        StepRecord(
            name="middle:induced_target",
            inequality=f"target = floor(eps^3*k) = {target_len} >= 2",
            outcome="ok" if ok else "failed",
        )
    )
    if not ok:
        return {}
    return _dichotomy_stage(g, cyc, pos, selected, q, target_len, k, eps, caps, steps)


def _dichotomy_stage(
    g: Graph,
    cyc: CycleWitness,
    pos: dict[int, int],
    selected: list[_PoolPair],
    q: int,
    target_len: int,
    k: int,
    eps: float,
    caps: OracleCaps | None,
    steps: list[StepRecord],
) -> dict[int, LengthEntry]:
    """Case split over the pre-anchor intervals.

    If some interval has no long induced increasing path ending at its
    anchor, that interval's endpoints are chord-dense and the range closes
    immediately; otherwise the induced paths become triples, the tri-colored
    pair graph is searched for a red clique, and the zigzag run closes it.
    """
    found: list[tuple[_PoolPair, OrderedPath]] = []
    for pr in selected:
        assert pos[pr.m_x] >= q, "interval must fit before the matched endpoint"
        seg = OrderedPath(cyc.vertices[pos[pr.m_x] - q : pos[pr.m_x] + 1])
        try:
            induced = find_induced_increasing_path(g, seg, pr.m_x, target_len, caps)
        except BudgetExceeded as exc:
            steps.append(
                StepRecord(name="middle:induced_search", inequality=str(exc),
                           outcome="failed")
            )
            return {}
        if induced is None:
            steps.append(
                StepRecord(
                    name="middle:induced_dichotomy",
                    inequality=(
                        f"no induced increasing path of length {target_len} before "
                        f"anchor {pr.m_x}: interval endpoints are chord-dense"
                    ),
                    outcome="ok",
                )
            )
            return _claim_closure(g, cyc, pos, pr, q, target_len - 1, k, steps)
        found.append((pr, induced))

    triples: list[SegmentTriple] = []
    for pr, induced in found:
        drop = induced.order % 3
        trimmed = OrderedPath(induced.vertices[drop:])
        if trimmed.order < 3:
            steps.append(
                StepRecord(
                    name="middle:triple_size",
                    inequality=f"induced path too short to split: {trimmed.order} < 3",
                    outcome="failed",
                )
            )
            return {}
        triples.append(segment_triple(trimmed))
    by_anchor = sorted(range(len(triples)), key=lambda i: pos[triples[i].anchor])
    triples = [triples[i] for i in by_anchor]
    pairs = [found[i][0] for i in by_anchor]

    h = build_tricolored(g, triples)
    want = min(h.r, max(2, math.ceil(4 / eps**7)))
    clique = find_red_clique(h, want, caps)
    steps.append(
        StepRecord(
            name="middle:red_clique",
            inequality=f"red clique of size {want} in {h.r} triples",
            outcome="ok" if clique else "failed",
        )
    )
    if clique is None:
        return {}
    clique_triples = [triples[i] for i in clique]
    clique_witnesses = {}
    for a in range(len(clique)):
        for b in range(a + 1, len(clique)):
            clique_witnesses[(a, b)] = h.witnesses[(clique[a], clique[b])]
    return _zigzag_closure(
        g, cyc, pos, clique_triples, clique_witnesses, pairs[clique[-1]], k, steps
    )


def middle_range_certificates(
    g: Graph,
    k: int,
    eps: float,
    ham: CycleWitness | None = None,
    caps: OracleCaps | None = None,
) -> RangeFragment:
    """Middle lengths, [(2+eps)k, 1000k/eps^2] clipped to [3, n].

    The constructive pipeline ejects a matched set, extracts dense pairs from
    it, and closes the range through either the chord-dense branch or the
    red-triple zigzag branch; every numeric gate is logged, and gates that
    fail at small scale leave the work to the per-length oracle fallback,
    whose entries are labeled as such.  Lengths that neither route decides
    stay ``unknown`` with the blocking detail recorded.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    frag = RangeFragment()
    lo = max(3, math.ceil((2 + eps) * k))
    hi = min(g.n, math.floor(1000 * k / eps**2))
    frag.steps.append(
        StepRecord(
            name="middle_range",
            inequality=f"range [(2+eps)k, 1000k/eps^2] clipped to [{lo}, {hi}]",
            outcome="ok" if lo <= hi else "failed",
        )
    )
    if lo > hi:
        return frag
    if ham is None:
        ham = hamilton_cycle(g, caps)
    if ham is None:
        raise PreconditionFailed("graph is not Hamiltonian")
    try:
        dec = partition_into_matching_cycle(g, k, eps, ham=ham, caps=caps)
        frag.steps.append(
            StepRecord(
                name="middle:matching_cycle",
                inequality=f"|S| = floor(eps*n/20) = {len(dec.s_set)}",
                outcome="ok",
            )
        )
        frag.entries.update(
            _middle_constructive(g, k, eps, dec, ham, frag.steps, caps)
        )
    except PreconditionFailed as exc:
        frag.steps.append(
            StepRecord(
                name="middle:matching_cycle",
                inequality=exc.inequality or str(exc),
                outcome="failed",
            )
        )
    for ell in range(lo, hi + 1):
        if ell in frag.entries:
            continue
        try:
            w = cycle_of_length(g, ell, caps)
        except BudgetExceeded as exc:
            frag.entries[ell] = LengthEntry(
                status=UNKNOWN,
                source="cycle_of_length",
                provenance="middle_range_fallback",
                detail=f"{exc}; constructive gates: see steps log",
            )
            continue
        if w is not None:
            frag.entries[ell] = LengthEntry(
                status=PRESENT,
                witness=w,
                source="cycle_of_length",
                provenance="middle_range_fallback",
            )
        else:
            frag.entries[ell] = LengthEntry(
                status=ABSENT,
                source="cycle_of_length",
                provenance="middle_range_fallback",
            )
    return frag


# --- full merge  ----------------------------------------------------------------


def full_certificate(
    g: Graph,
    params: AnalysisParams,
    ham: CycleWitness | None = None,
    caps: OracleCaps | None = None,
) -> SpectrumReport:
    """Merged spectrum over all three ranges plus an oracle fallback.

    Constructive witnesses take precedence over oracle findings; a decided
    presence/absence clash between producers raises (soundness gate).  Every
    witness in the final report validates against the graph.
    """
    from .errors import CapExceeded

    k, eps = params.k, params.eps
    report = SpectrumReport(n=g.n)

    def absorb(frag: RangeFragment) -> None:
        for ell, entry in frag.entries.items():
            report.entries[ell] = better_entry(report.entries.get(ell), entry)
        report.steps.extend(frag.steps)
        report.flags.extend(frag.flags)

    absorb(lower_range_certificates(g, k, eps, caps))

    if ham is None:
        try:
            ham = hamilton_cycle(g, caps)
        except CapExceeded as exc:
            report.steps.append(
                StepRecord(name="hamilton_witness", inequality=str(exc),
                           outcome="failed")
            )
    if ham is None:
        report.steps.append(
            StepRecord(
                name="hamilton_witness",
                inequality="no Hamilton cycle available",
                outcome="failed",
            )
        )
    else:
        absorb(upper_range_certificates(g, k, eps, ham=ham, caps=caps))
        absorb(middle_range_certificates(g, k, eps, ham=ham, caps=caps))

    for ell in range(3, g.n + 1):
        current = report.entries.get(ell)
        if current is not None and current.status != UNKNOWN:
            continue
        try:
            w = cycle_of_length(g, ell, caps)
        except BudgetExceeded as exc:
            if current is None:
                report.entries[ell] = LengthEntry(
                    status=UNKNOWN,
                    source="cycle_of_length",
                    provenance="oracle_fallback",
                    detail=str(exc),
                )
            continue
        entry = (
            LengthEntry(
                status=PRESENT,
                witness=w,
                source="cycle_of_length",
                provenance="oracle_fallback",
            )
            if w is not None
            else LengthEntry(
                status=ABSENT, source="cycle_of_length", provenance="oracle_fallback"
            )
        )
        report.entries[ell] = better_entry(report.entries.get(ell), entry)

    for ell, entry in report.entries.items():
        if entry.witness is not None:
            assert validate_cycle(g, entry.witness) and entry.witness.length == ell
    return report
