import random

import pytest

from conftest import complete_graph, cycle_graph, random_graph
from pancyclic.core import Graph, OrderedPath, validate_path
from pancyclic.errors import NoChordFound, PreconditionFailed
from pancyclic.oracles import independence_number
from pancyclic.shortening import (
    easy_jump,
    find_special_sequence,
    jump_with_zigzag,
    shorten_to_target,
    special_edge_decomposition,
    validate_special_sequence,
    zigzag_precondition,
)


def spanning_path(g: Graph) -> OrderedPath:
    return OrderedPath(tuple(range(g.n)))


class TestEasyJump:
    def test_k5_first_window(self):
        g = complete_graph(5)
        out = easy_jump(g, OrderedPath((0, 1, 2, 3, 4)), 1)
        assert out.endpoints == (0, 4)
        assert out.length in (2, 3)
        assert set(out.vertices) <= {0, 1, 2, 3, 4}
        assert validate_path(g, out)

    def test_short_path_rejected(self):
        with pytest.raises(PreconditionFailed):
            easy_jump(complete_graph(5), OrderedPath((0, 1, 2)), 1)

    def test_chordless_path_raises(self):
        # a chordless spanning path with alpha > k: the error is allowed here
        g = Graph(6, [(i, i + 1) for i in range(5)])
        with pytest.raises(NoChordFound):
            easy_jump(g, spanning_path(g), 1)

    def test_length_bounds_random(self):
        for seed in range(120):
            rng = random.Random(seed)
            n = rng.randint(8, 18)
            g = random_graph(seed, n, 0.55).with_edges(
                [(i, i + 1) for i in range(n - 1)]
            )
            alpha, _ = independence_number(g)
            p = spanning_path(g)
            if p.length <= 2 * alpha:
                continue
            out = easy_jump(g, p, alpha)
            assert p.length - 2 * alpha <= out.length < p.length
            assert out.endpoints == p.endpoints
            assert set(out.vertices) <= set(p.vertices)
            assert validate_path(g, out)


class TestSpecialSequences:
    def test_complete_graph_full_chain(self):
        g = complete_graph(6)
        seq = find_special_sequence(g, range(6), frozenset(), 1)
        assert seq.positions == (0, 1, 2, 3, 4)
        assert seq.edges == ((0, 2), (1, 3), (2, 4), (3, 5))
        assert validate_special_sequence(g, seq)
        assert seq.count_outside(frozenset()) >= 6 / 2

    def test_edgeless_host_singleton(self):
        g = Graph(6)
        seq = find_special_sequence(g, range(6), frozenset(), 3)
        assert len(seq.positions) == 1
        assert seq.count_outside(frozenset()) >= 6 / (2 * 3)

    def test_decomposition_partitions_positions(self):
        for seed in range(60):
            n = 4 + seed % 10
            g = random_graph(seed, n, 0.4)
            host = list(range(n))
            random.Random(seed).shuffle(host)
            seqs = special_edge_decomposition(g, host)
            seen: list[int] = []
            for s in seqs:
                assert validate_special_sequence(g, s)
                seen.extend(s.positions)
            assert sorted(seen) == list(range(n))

    def test_no_two_sequences_concatenable(self):
        # maximality: no sequence ends where another begins
        for seed in range(60):
            n = 5 + seed % 9
            g = random_graph(900 + seed, n, 0.5)
            seqs = special_edge_decomposition(g, range(n))
            chains = [s for s in seqs if len(s.positions) > 1]
            for s1 in chains:
                for s2 in chains:
                    if s1 is not s2:
                        assert s1.positions[-1] != s2.positions[0]

    def test_size_bound_with_exact_alpha(self):
        for seed in range(80):
            n = 5 + seed % 10  # up to 14
            g = random_graph(4000 + seed, n, 0.25 + (seed % 7) / 10)
            rng = random.Random(seed)
            excluded = frozenset(rng.sample(range(n), rng.randint(0, n // 3)))
            alpha, _ = independence_number(g)
            seq = find_special_sequence(g, range(n), excluded, alpha)
            assert seq.count_outside(excluded) >= (n - len(excluded)) / (2 * alpha)

    def test_cycle_minus_edge_bound(self):
        g = cycle_graph(8)
        host = list(range(8))  # the cycle order minus the wrap edge
        alpha, _ = independence_number(g)
        seq = find_special_sequence(g, host, frozenset(), alpha)
        assert seq.count_outside(frozenset()) >= 8 / (2 * alpha)
        assert validate_special_sequence(g, seq)


class TestZigzagPrecondition:
    def test_rendering_and_truth(self):
        holds, text = zigzag_precondition(12, 1, 0, 1)
        assert holds and "12" in text
        holds, _ = zigzag_precondition(4, 1, 0, 1)
        assert not holds

    def test_matches_theorem_threshold(self):
        # with c=1 and no pinned set the condition is exactly |P| > 2k^2 + 2k
        for k in (1, 2, 3):
            bound = 2 * k * k + 2 * k
            assert not zigzag_precondition(bound, 1, 0, k)[0]
            assert zigzag_precondition(bound + 1, 1, 0, k)[0]


class TestJumpWithZigzag:
    def test_k12_c1_removes_exactly_one(self):
        g = complete_graph(12)
        p = spanning_path(g)
        out = jump_with_zigzag(g, p, 1, frozenset(), 1)
        assert out.length == p.length - 1
        assert out.endpoints == p.endpoints
        assert validate_path(g, out)

    def test_k12_c2_bounds(self):
        g = complete_graph(12)
        p = spanning_path(g)
        out = jump_with_zigzag(g, p, 2, frozenset(), 1)
        assert p.length - 5 <= out.length < p.length
        assert out.endpoints == p.endpoints
        assert validate_path(g, out)

    def test_precondition_bookkeeping(self):
        # small hosts fail the arithmetic condition outright
        g = complete_graph(4)
        with pytest.raises(PreconditionFailed) as err:
            jump_with_zigzag(g, spanning_path(g), 1, frozenset(), 2)
        assert err.value.inequality

    def test_pinned_never_dropped(self):
        # hosts whose non-edges form a k-partite graph have alpha <= k by
        # construction; the exact oracle re-verifies each instance
        runs = 0
        for seed in range(200):
            rng = random.Random(seed)
            k = rng.choice((1, 2))
            c = rng.choice((1, 2))
            n = rng.randint(16, 26)
            parts = [rng.randrange(k) for _ in range(n)]
            edges = [
                (u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if parts[u] == parts[v] or rng.random() < 0.35
            ]
            g = Graph(n, edges).with_edges([(i, i + 1) for i in range(n - 1)])
            p = spanning_path(g)
            pinned = frozenset(rng.sample(range(1, n - 1), rng.randint(0, 3)))
            if not zigzag_precondition(n, c, len(pinned), k)[0]:
                continue
            alpha, _ = independence_number(g)
            assert alpha <= k
            out = jump_with_zigzag(g, p, c, pinned, k)
            runs += 1
            assert pinned <= set(out.vertices)
            assert p.length - (4 * c - 3) <= out.length < p.length
            assert out.endpoints == p.endpoints
            assert set(out.vertices) <= set(p.vertices)
            assert validate_path(g, out)
        assert runs >= 100  # the corpus must actually exercise the jump

    def test_pinned_off_path_rejected(self):
        g = complete_graph(12)
        with pytest.raises(PreconditionFailed):
            jump_with_zigzag(g, OrderedPath(tuple(range(11))), 1, frozenset({11}), 1)


class TestShortenToTarget:
    def test_k20_c1_every_length(self):
        g = complete_graph(20)
        chain = shorten_to_target(g, spanning_path(g), 5, 1, frozenset(), 1)
        assert [p.length for p in chain] == list(range(19, 3, -1))
        for p in chain:
            assert validate_path(g, p)
            assert p.endpoints == (0, 19)

    def test_k20_c3_gap_bound(self):
        g = complete_graph(20)
        chain = shorten_to_target(g, spanning_path(g), 5, 3, frozenset(), 1)
        lengths = [p.length for p in chain]
        assert all(0 < a - b <= 9 for a, b in zip(lengths, lengths[1:]))
        assert lengths[-1] < 5

    def test_failing_first_step_attaches_partial(self):
        g = complete_graph(6)
        with pytest.raises(PreconditionFailed) as err:
            shorten_to_target(g, spanning_path(g), 2, 1, frozenset(), 2)
        assert [p.length for p in err.value.partial] == [5]


class TestShorteningContext:
    def test_invariants_on_random_hosts(self):
        from pancyclic.shortening import build_shortening_context

        for seed in range(40):
            rng = random.Random(7000 + seed)
            n = rng.randint(14, 24)
            g = random_graph(seed, n, 0.6).with_edges(
                [(i, i + 1) for i in range(n - 1)]
            )
            p = spanning_path(g)
            c = rng.choice((1, 2))
            pinned = frozenset(rng.sample(range(1, n - 1), rng.randint(0, 2)))
            protected = set()
            for v in pinned:
                protected.update(
                    range(max(0, v - (2 * c - 1)), min(n, v + 2 * c))
                )
            seq = find_special_sequence(g, p.vertices, frozenset(protected), 2)
            ctx = build_shortening_context(p, c, pinned, seq)
            assert set(ctx.pinned_positions) <= ctx.protected
            assert len(ctx.protected) <= (4 * c - 1) * len(pinned)
            for v, skips in ctx.skip_sets.items():
                assert len(skips) == c
                assert all(v - (2 * c - 1) <= s <= v - 1 for s in skips)
                assert not set(skips) & set(ctx.pinned_positions)


class TestZigzagWideRadius:
    def test_radii_three_and_four(self):
        # larger radii exercise multi-element skip sets and longer reroutes
        import math

        runs = 0
        for seed in range(250):
            rng = random.Random(50_000 + seed)
            k = rng.choice((1, 2, 3))
            c = rng.choice((3, 4))
            u = rng.randint(0, 3)
            n_min = math.floor(2 * k * (k + c) / c + (4 * c - 1) * u) + 1
            if n_min > 50:
                continue
            n = rng.randint(n_min, min(n_min + 10, 55))
            parts = [rng.randrange(k) for _ in range(n)]
            edges = [
                (x, y)
                for x in range(n)
                for y in range(x + 1, n)
                if parts[x] == parts[y] or rng.random() < 0.4
            ]
            g = Graph(n, edges).with_edges([(i, i + 1) for i in range(n - 1)])
            p = spanning_path(g)
            pinned = frozenset(rng.sample(range(1, n - 1), u))
            out = jump_with_zigzag(g, p, c, pinned, k)
            runs += 1
            assert pinned <= set(out.vertices)
            assert p.length - (4 * c - 3) <= out.length < p.length
            assert validate_path(g, out)
        assert runs >= 150
