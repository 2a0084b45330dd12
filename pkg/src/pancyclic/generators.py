"""Instance generators: the chained-clique extremal construction and seeded
random Hamiltonian graphs with a guaranteed independence bound.

Both are fully seed-deterministic: identical configuration gives identical
graph bytes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import CycleWitness, Graph, validate_cycle
from .errors import CapExceeded, Infeasible, InvalidK
from .oracles import OracleCaps, independence_number


@dataclass(frozen=True)
class ExtremalSpec:
    """k cliques of size 2k-2 chained by one connector edge per consecutive
    pair (cyclically): a Hamiltonian graph on 2k^2 - 2k vertices with
    independence number k and no cycle of length 2k-1.

    Clique i occupies labels [i*(2k-2), (i+1)*(2k-2)); its two distinguished
    vertices are ``a(i)`` (first label, sends the connector to clique i+1)
    and ``b(i)`` (second label, receives the connector from clique i-1).
    """

    k: int

    def __post_init__(self):
        if self.k < 2:
            raise InvalidK(f"extremal construction needs k >= 2, got {self.k}")

    @property
    def clique_size(self) -> int:
        return 2 * self.k - 2

    @property
    def n(self) -> int:
        return self.k * self.clique_size

    def a(self, i: int) -> int:
        return (i % self.k) * self.clique_size

    def b(self, i: int) -> int:
        return (i % self.k) * self.clique_size + 1

    def clique(self, i: int) -> range:
        lo = (i % self.k) * self.clique_size
        return range(lo, lo + self.clique_size)

    def graph(self) -> Graph:
        edges = []
        for i in range(self.k):
            block = list(self.clique(i))
            edges.extend(
                (u, v) for x, u in enumerate(block) for v in block[x + 1 :]
            )
            edges.append((self.a(i), self.b(i + 1)))
        return Graph(self.n, edges)

    def hamilton_cycle(self) -> CycleWitness:
        """Enter each clique at b(i), sweep it, leave at a(i)."""
        seq: list[int] = []
        for i in range(self.k):
            seq.extend(self._crossing_segment(i, self.clique_size - 1))
        return CycleWitness(tuple(seq))

    def _crossing_segment(self, i: int, length: int) -> list[int]:
        """b(i) -> ... -> a(i) inside clique i, using ``length`` edges."""
        interior = [v for v in self.clique(i) if v not in (self.a(i), self.b(i))]
        assert 1 <= length <= self.clique_size - 1
        return [self.b(i)] + interior[: length - 1] + [self.a(i)]

    def cycle_witness(self, ell: int) -> CycleWitness | None:
        """Constructed witness for length ``ell``, or None when no cycle of
        that length exists.

        Short cycles (up to 2k-2) live inside one clique.  Longer cycles must
        cross every connector, so they have length at least 2k; any length in
        [2k, n] is met by widening the sweep of each clique one vertex at a
        time.  Length 2k-1 (and anything else in between) is unattainable.
        """
        if not 3 <= ell <= self.n:
            return None
        if ell <= self.clique_size:
            block = list(self.clique(0))
            return CycleWitness(tuple(block[:ell]))
        if ell < 2 * self.k:
            return None
        budget = ell - 2 * self.k  # extra edges beyond the minimal crossing
        seq: list[int] = []
        for i in range(self.k):
            extra = min(budget, self.clique_size - 2)
            budget -= extra
            seq.extend(self._crossing_segment(i, 1 + extra))
        assert budget == 0
        return CycleWitness(tuple(seq))

    def present_lengths(self) -> frozenset[int]:
        short = frozenset(range(3, self.clique_size + 1))
        long = frozenset(range(2 * self.k, self.n + 1))
        return short | long


def gen_extremal(k: int) -> Graph:
    """The chained-clique graph; see ``ExtremalSpec`` for the labeling."""
    return ExtremalSpec(k).graph()


@dataclass(frozen=True)
class GeneratorConfig:
    """Seeded recipe for a Hamiltonian graph with independence number <= k.

    ``densities`` is the per-attempt probability that an allowed cross-part
    pair becomes an edge; the seed fully determines the output.
    """

    n: int
    k: int
    seed: int
    densities: tuple[float, ...] = (0.25, 0.5, 0.75, 0.9)
    max_attempts: int = 8

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("need n >= 3 to plant a Hamilton cycle")
        if self.k < 1:
            raise ValueError("k must be a positive integer")
        if not self.densities:
            raise ValueError("densities must be nonempty")


@dataclass(frozen=True)
class BoundedAlphaInstance:
    graph: Graph
    alpha: int
    independent_set: tuple[int, ...]
    planted: CycleWitness


def gen_random_bounded_alpha(
    cfg: GeneratorConfig, caps: OracleCaps | None = None
) -> BoundedAlphaInstance:
    """Hamiltonian graph with oracle-verified independence number <= k.

    Construction: spread the vertices over k parts and take every within-part
    pair as an edge, plus a random share of cross-part pairs, plus a planted
    random Hamilton cycle.  The non-edges then form a k-partite graph, which
    has no independent set of size k+1, so the bound holds by construction;
    the exact oracle still verifies it (correctness by verification, not by
    cleverness), and the verified maximum independent set is returned.
    """
    rng = random.Random(cfg.seed)
    for attempt in range(cfg.max_attempts):
        density = cfg.densities[attempt % len(cfg.densities)]
        if cfg.k == 1:
            edges = [
                (u, v) for u in range(cfg.n) for v in range(u + 1, cfg.n)
            ]  # alpha <= 1 forces the complete graph
        else:
            parts = [rng.randrange(cfg.k) for _ in range(cfg.n)]
            edges = [
                (u, v)
                for u in range(cfg.n)
                for v in range(u + 1, cfg.n)
                if parts[u] == parts[v] or rng.random() < density
            ]
        order = list(range(cfg.n))
        rng.shuffle(order)
        planted = CycleWitness(tuple(order))
        g = Graph(cfg.n, edges).with_edges(
            (order[i], order[(i + 1) % cfg.n]) for i in range(cfg.n)
        )
        try:
            alpha, witness = independence_number(g, caps)
        except CapExceeded:
            raise
        if alpha <= cfg.k:
            assert validate_cycle(g, planted)
            return BoundedAlphaInstance(
                graph=g, alpha=alpha, independent_set=witness, planted=planted
            )
    raise Infeasible(
        f"no graph with alpha <= {cfg.k} found in {cfg.max_attempts} attempts"
    )
