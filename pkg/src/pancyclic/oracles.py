"""Exact brute-force oracles: independence number, Hamiltonicity, and
per-length cycle existence.

These ground-truth every constructive module.  They are exhaustive searches
with pruning, never heuristics: a ``None`` from ``cycle_of_length`` means the
search space was exhausted and is a proof of absence.  Caps and budgets are
configuration, and overruns raise (``CapExceeded`` / ``BudgetExceeded``)
instead of degrading the answer.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from .core import CycleWitness, Graph
from .errors import BudgetExceeded, CapExceeded
from .report import ABSENT, PRESENT, UNKNOWN, LengthEntry, SpectrumReport

ORACLE_CAP_ENV = "PANCYCLIC_ORACLE_CAP"


@dataclass(frozen=True)
class OracleCaps:
    """Size caps and search budgets for the exact oracles.

    alpha_cap        max n for independence-number / Hamiltonicity search
    spectrum_cap     max n for a full per-length spectrum sweep
    subset_budget    max number of ell-subsets a fixed-length search may
                     enumerate before switching to path DFS
    dfs_node_budget  max DFS nodes for a fixed-length path search
    enumeration_cap  max n for exact two-vertex path-length enumeration
    """

    alpha_cap: int = 64
    spectrum_cap: int = 16
    subset_budget: int = 2_000_000
    dfs_node_budget: int = 2_000_000
    enumeration_cap: int = 16


def caps_from_env() -> OracleCaps:
    """Default caps; PANCYCLIC_ORACLE_CAP overrides both size caps."""
    caps = OracleCaps()
    raw = os.environ.get(ORACLE_CAP_ENV)
    if raw:
        cap = int(raw)
        caps = OracleCaps(
            alpha_cap=cap,
            spectrum_cap=cap,
            subset_budget=caps.subset_budget,
            dfs_node_budget=caps.dfs_node_budget,
            enumeration_cap=caps.enumeration_cap,
        )
    return caps


def _resolve(caps: OracleCaps | None) -> OracleCaps:
    return caps if caps is not None else caps_from_env()


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# --- independence number -----------------------------------------------------


def independence_number(
    g: Graph, caps: OracleCaps | None = None
) -> tuple[int, tuple[int, ...]]:
    """Exact maximum independent set via branch and bound.

    Returns ``(alpha, witness)`` where ``witness`` is one maximum independent
    set.  The upper bound used for pruning is a greedy clique cover of the
    remaining candidates (any independent set meets each clique at most once).
    Raises ``CapExceeded`` above ``caps.alpha_cap``.
    """
    caps = _resolve(caps)
    if g.n > caps.alpha_cap:
        raise CapExceeded(f"n={g.n} exceeds independence oracle cap {caps.alpha_cap}")
    if g.n == 0:
        return 0, ()

    adj = g._masks  # bitmask adjacency
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))

    best_size = 0
    best_set = 0

    def clique_cover_bound(cand: int) -> int:
        cliques: list[int] = []  # one mask per clique
        for v in order:
            bit = 1 << v
            if not cand & bit:
                continue
            for i, cl in enumerate(cliques):
                if cl & ~adj[v] == 0:  # v adjacent to every clique member
                    cliques[i] = cl | bit
                    break
            else:
                cliques.append(bit)
        return len(cliques)

    def expand(current: int, size: int, cand: int) -> None:
        nonlocal best_size, best_set
        if size > best_size:
            best_size, best_set = size, current
        if not cand:
            return
        if size + clique_cover_bound(cand) <= best_size:
            return
        # branch on the candidate with the most candidate-neighbors
        pick = -1
        pick_deg = -1
        for v in _bits(cand):
            d = (adj[v] & cand).bit_count()
            if d > pick_deg:
                pick, pick_deg = v, d
        bit = 1 << pick
        expand(current | bit, size + 1, cand & ~(adj[pick] | bit))
        expand(current, size, cand & ~bit)

    expand(0, 0, (1 << g.n) - 1)
    return best_size, tuple(sorted(_bits(best_set)))


def max_clique(g: Graph, caps: OracleCaps | None = None) -> tuple[int, tuple[int, ...]]:
    """Exact maximum clique via pivoted Bron-Kerbosch.

    Kept as an algorithmically independent route so tests can cross-check
    ``alpha(g) == max_clique(complement(g))``.
    """
    caps = _resolve(caps)
    if g.n > caps.alpha_cap:
        raise CapExceeded(f"n={g.n} exceeds clique oracle cap {caps.alpha_cap}")
    if g.n == 0:
        return 0, ()

    adj = g._masks
    best_size = 0
    best_set = 0

    def bk(r: int, size: int, p: int, x: int) -> None:
        nonlocal best_size, best_set
        if not p and not x:
            if size > best_size:
                best_size, best_set = size, r
            return
        if size + p.bit_count() <= best_size:
            return
        # pivot with most neighbors in p
        pivot = -1
        pivot_deg = -1
        for v in _bits(p | x):
            d = (adj[v] & p).bit_count()
            if d > pivot_deg:
                pivot, pivot_deg = v, d
        for v in _bits(p & ~adj[pivot]):
            bit = 1 << v
            bk(r | bit, size + 1, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    bk(0, 0, (1 << g.n) - 1, 0)
    return best_size, tuple(sorted(_bits(best_set)))


# --- Hamiltonicity -----------------------------------------------------------


def hamilton_cycle(g: Graph, caps: OracleCaps | None = None) -> CycleWitness | None:
    """Backtracking Hamilton-cycle search; ``None`` is a proof of absence.

    Prunes a branch when some unvisited vertex cannot keep two usable cycle
    neighbors, or when the unvisited region is disconnected from the current
    path end.
    """
    caps = _resolve(caps)
    if g.n > caps.alpha_cap:
        raise CapExceeded(f"n={g.n} exceeds Hamiltonicity oracle cap {caps.alpha_cap}")
    n = g.n
    if n < 3:
        return None
    if any(g.degree(v) < 2 for v in range(n)):
        return None

    adj = g._masks
    full = (1 << n) - 1
    start_bit = 1

    def feasible(unvisited: int, end: int) -> bool:
        # every unvisited vertex needs >= 2 usable neighbors; the final cycle
        # can only reach unvisited territory through `end` and close at 0
        avail = unvisited | (1 << end) | start_bit
        for v in _bits(unvisited):
            if (adj[v] & avail).bit_count() < 2:
                return False
        # connectivity: from `end`, the unvisited region must be reachable
        frontier = 1 << end
        seen = frontier
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v] & unvisited & ~seen
            seen |= nxt
            frontier = nxt
        return unvisited & ~seen == 0

    path = [0]

    def extend(visited: int, end: int) -> bool:
        if visited == full:
            return g.has_edge(end, 0)
        unvisited = full & ~visited
        if not feasible(unvisited, end):
            return False
        for w in g.neighbors(end):
            bit = 1 << w
            if visited & bit:
                continue
            path.append(w)
            if extend(visited | bit, w):
                return True
            path.pop()
        return False

    if extend(1, 0):
        return CycleWitness(tuple(path))
    return None


# --- fixed-length cycles -----------------------------------------------------


def _cycle_on_subset(g: Graph, subset: tuple[int, ...]) -> tuple[int, ...] | None:
    """Cycle through exactly the given vertices, or None (exhaustive)."""
    k = len(subset)
    index = {v: i for i, v in enumerate(subset)}
    local = [0] * k
    for i, v in enumerate(subset):
        m = 0
        for w in g.neighbors(v):
            j = index.get(w)
            if j is not None:
                m |= 1 << j
        local[i] = m
    full = (1 << k) - 1
    if any(local[i].bit_count() < 2 for i in range(k)):
        return None
    path = [0]

    def extend(visited: int, end: int) -> bool:
        if visited == full:
            return bool(local[end] & 1)
        for w in _bits(local[end] & ~visited):
            path.append(w)
            if extend(visited | (1 << w), w):
                return True
            path.pop()
        return False

    if extend(1, 0):
        return tuple(subset[i] for i in path)
    return None


def cycle_of_length(
    g: Graph, ell: int, caps: OracleCaps | None = None
) -> CycleWitness | None:
    """Search for a cycle of length exactly ``ell``.

    Two exhaustive strategies: enumerate ell-subsets when their count fits the
    budget, otherwise DFS over simple paths anchored at each possible minimum
    vertex.  ``None`` is returned only when a strategy completed, so it proves
    absence; an interrupted DFS raises ``BudgetExceeded`` instead.
    """
    caps = _resolve(caps)
    n = g.n
    if not 3 <= ell <= n:
        raise ValueError(f"cycle length {ell} outside [3, n={n}]")

    if math.comb(n, ell) <= caps.subset_budget:
        from itertools import combinations

        adj = g._masks
        for subset in combinations(range(n), ell):
            sub_mask = 0
            for v in subset:
                sub_mask |= 1 << v
            if any((adj[v] & sub_mask).bit_count() < 2 for v in subset):
                continue
            found = _cycle_on_subset(g, subset)
            if found is not None:
                return CycleWitness(found)
        return None

    # DFS over paths whose minimum vertex is the anchor s
    adj = g._masks
    nodes = 0
    budget = caps.dfs_node_budget
    for s in range(n):
        high = 0
        for v in range(s + 1, n):
            high |= 1 << v
        path = [s]

        def extend(visited: int, end: int, remaining: int) -> tuple[int, ...] | None:
            nonlocal nodes
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(
                    f"cycle_of_length(ell={ell}) exceeded {budget} DFS nodes"
                )
            if remaining == 0:
                return tuple(path) if g.has_edge(end, s) else None
            for w in _bits(adj[end] & high & ~visited):
                path.append(w)
                got = extend(visited | (1 << w), w, remaining - 1)
                if got is not None:
                    return got
                path.pop()
            return None

        got = extend(1 << s, s, ell - 1)
        if got is not None:
            return CycleWitness(got)
    return None


def cycle_spectrum(g: Graph, caps: OracleCaps | None = None) -> SpectrumReport:
    """Exhaustive per-length sweep over ell in [3, n].

    Requires ``n <= caps.spectrum_cap`` so that every length can actually be
    exhausted; within the cap the report contains no ``unknown`` entries.
    """
    caps = _resolve(caps)
    if g.n > caps.spectrum_cap:
        raise CapExceeded(f"n={g.n} exceeds spectrum cap {caps.spectrum_cap}")
    report = SpectrumReport(n=g.n)
    for ell in range(3, g.n + 1):
        try:
            witness = cycle_of_length(g, ell, caps)
        except BudgetExceeded as exc:
            report.entries[ell] = LengthEntry(
                status=UNKNOWN, source="cycle_of_length", detail=str(exc)
            )
            continue
        if witness is None:
            report.entries[ell] = LengthEntry(status=ABSENT, source="cycle_of_length")
        else:
            report.entries[ell] = LengthEntry(
                status=PRESENT, witness=witness, source="cycle_of_length"
            )
    return report


# --- exact two-vertex path-length enumeration --------------------------------


def xy_path_lengths(
    g: Graph, x: int, y: int, caps: OracleCaps | None = None
) -> frozenset[int]:
    """Exact set of lengths of simple x-y paths, by subset dynamic programming.

    Complete (equivalent to enumerating every simple path), so it is usable as
    an oracle; cost is O(2^n * n^2), hence the ``enumeration_cap``.  Includes
    0 when ``x == y`` (the one-vertex path).
    """
    caps = _resolve(caps)
    if g.n > caps.enumeration_cap:
        raise BudgetExceeded(
            f"n={g.n} exceeds path-length enumeration cap {caps.enumeration_cap}"
        )
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise ValueError("endpoints out of range")
    if x == y:
        return frozenset({0})
    adj = g._masks
    size = 1 << g.n
    xbit = 1 << x
    ybit = 1 << y
    # ends[mask] = bitmask of vertices w such that some simple path from x
    # with vertex set `mask` ends at w
    ends = [0] * size
    ends[xbit] = xbit
    lengths = set()
    for mask in range(size):
        e = ends[mask]
        if not e or not mask & xbit:
            continue
        if e & ybit:
            lengths.add(mask.bit_count() - 1)
            e &= ~ybit  # a simple path never continues past y and comes back
        for w in _bits(e):
            ext = adj[w] & ~mask
            for u in _bits(ext):
                ends[mask | (1 << u)] |= 1 << u
    return frozenset(lengths)
