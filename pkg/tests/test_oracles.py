import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complete_graph, cycle_graph, path_graph, random_graph
from pancyclic.core import Graph
from pancyclic.errors import BudgetExceeded, CapExceeded
from pancyclic.oracles import (
    OracleCaps,
    cycle_of_length,
    cycle_spectrum,
    hamilton_cycle,
    independence_number,
    max_clique,
    xy_path_lengths,
)
from pancyclic.core import validate_cycle
from reference import (
    naive_alpha,
    naive_cycle_lengths,
    naive_max_clique,
    naive_xy_path_lengths,
)


class TestIndependenceNumber:
    def test_complete(self):
        alpha, witness = independence_number(complete_graph(7))
        assert alpha == 1 and len(witness) == 1

    def test_edgeless(self):
        alpha, witness = independence_number(Graph(6))
        assert alpha == 6 and witness == (0, 1, 2, 3, 4, 5)

    def test_cycle(self):
        alpha, _ = independence_number(cycle_graph(7))
        assert alpha == 3

    def test_witness_is_independent(self):
        g = random_graph(3, 12, 0.4)
        alpha, witness = independence_number(g)
        assert len(witness) == alpha
        assert all(
            not g.has_edge(u, v)
            for i, u in enumerate(witness)
            for v in witness[i + 1 :]
        )

    def test_cap(self):
        with pytest.raises(CapExceeded):
            independence_number(Graph(5), OracleCaps(alpha_cap=4))

    def test_matches_naive_on_random_graphs(self):
        for seed in range(40):
            g = random_graph(seed, 4 + seed % 6, 0.1 + (seed % 9) / 10)
            assert independence_number(g)[0] == naive_alpha(g)

    def test_cross_check_against_clique_of_complement(self):
        # alpha is the most safety-critical oracle; check it against an
        # algorithmically independent maximum-clique search
        for seed in range(200):
            n = 4 + seed % 11  # up to 14
            g = random_graph(10_000 + seed, n, 0.15 + (seed % 8) / 10)
            alpha, _ = independence_number(g)
            omega, _ = max_clique(g.complement())
            assert alpha == omega


class TestMaxClique:
    def test_matches_naive(self):
        for seed in range(30):
            g = random_graph(seed, 4 + seed % 7, 0.2 + (seed % 7) / 10)
            assert max_clique(g)[0] == naive_max_clique(g)

    def test_witness_is_clique(self):
        g = random_graph(77, 12, 0.5)
        size, witness = max_clique(g)
        assert len(witness) == size
        assert all(
            g.has_edge(u, v)
            for i, u in enumerate(witness)
            for v in witness[i + 1 :]
        )


class TestHamiltonCycle:
    def test_cycle_graph(self):
        w = hamilton_cycle(cycle_graph(5))
        assert w is not None and w.vertices == (0, 1, 2, 3, 4)

    def test_star_has_none(self):
        assert hamilton_cycle(Graph(4, [(0, 1), (0, 2), (0, 3)])) is None

    def test_path_has_none(self):
        assert hamilton_cycle(path_graph(6)) is None

    def test_petersen(self):
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        petersen = Graph(10, outer + spokes + inner)
        assert hamilton_cycle(petersen) is None  # classic non-Hamiltonian graph

    def test_agrees_with_naive_spectrum(self):
        for seed in range(40):
            n = 4 + seed % 5
            g = random_graph(500 + seed, n, 0.3 + (seed % 7) / 10)
            w = hamilton_cycle(g)
            assert (w is not None) == (n in naive_cycle_lengths(g))
            if w is not None:
                assert validate_cycle(g, w) and w.length == n


class TestCycleOfLength:
    def test_triangle_in_k4(self):
        w = cycle_of_length(complete_graph(4), 3)
        assert w is not None and w.length == 3

    def test_c5_has_no_c4(self):
        assert cycle_of_length(cycle_graph(5), 4) is None

    def test_bad_length_rejected(self):
        with pytest.raises(ValueError):
            cycle_of_length(complete_graph(4), 2)

    def test_matches_naive_both_strategies(self):
        subset_caps = OracleCaps()
        dfs_caps = OracleCaps(subset_budget=0)  # force the DFS strategy
        for seed in range(25):
            n = 4 + seed % 7  # up to 10
            g = random_graph(900 + seed, n, 0.25 + (seed % 7) / 10)
            expected = naive_cycle_lengths(g)
            for ell in range(3, n + 1):
                a = cycle_of_length(g, ell, subset_caps)
                b = cycle_of_length(g, ell, dfs_caps)
                assert (a is not None) == (ell in expected)
                assert (b is not None) == (ell in expected)
                for w in (a, b):
                    if w is not None:
                        assert validate_cycle(g, w) and w.length == ell

    def test_budget_exhaustion_raises(self):
        g = cycle_graph(12).complement()  # dense, no short certificates for absence
        with pytest.raises(BudgetExceeded):
            cycle_of_length(g, 11, OracleCaps(subset_budget=0, dfs_node_budget=10))


class TestCycleSpectrum:
    def test_k4(self):
        rep = cycle_spectrum(complete_graph(4))
        assert rep.present_set() == {3, 4}
        assert not rep.absent_set() and not rep.unknown_set()

    def test_c6(self):
        rep = cycle_spectrum(cycle_graph(6))
        assert rep.present_set() == {6}
        assert rep.absent_set() == {3, 4, 5}

    def test_cap(self):
        with pytest.raises(CapExceeded):
            cycle_spectrum(Graph(20), OracleCaps(spectrum_cap=16))

    def test_monotone_under_edge_addition(self):
        # adding edges never shrinks the present-set
        import random as _random

        for seed in range(100):
            rng = _random.Random(7000 + seed)
            n = rng.randint(4, 12)
            g = random_graph(seed, n, rng.uniform(0.1, 0.5))
            non_edges = [
                (u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if not g.has_edge(u, v)
            ]
            extra = rng.sample(non_edges, min(len(non_edges), rng.randint(1, 4)))
            g2 = g.with_edges(extra)
            assert cycle_spectrum(g).present_set() <= cycle_spectrum(g2).present_set()

    def test_witnesses_all_validate(self):
        for seed in range(20):
            g = random_graph(300 + seed, 9, 0.4)
            rep = cycle_spectrum(g)
            for ell, entry in rep.entries.items():
                if entry.witness is not None:
                    assert validate_cycle(g, entry.witness)
                    assert entry.witness.length == ell


class TestXyPathLengths:
    def test_k5_all_lengths(self):
        g = complete_graph(5)
        assert xy_path_lengths(g, 0, 4) == {1, 2, 3, 4}

    def test_cycle_two_routes(self):
        g = cycle_graph(6)
        assert xy_path_lengths(g, 0, 1) == {1, 5}

    def test_same_vertex(self):
        assert xy_path_lengths(cycle_graph(4), 2, 2) == {0}

    def test_matches_naive(self):
        for seed in range(30):
            n = 3 + seed % 7
            g = random_graph(40 + seed, n, 0.3 + (seed % 6) / 10)
            assert xy_path_lengths(g, 0, n - 1) == naive_xy_path_lengths(g, 0, n - 1)

    def test_cap(self):
        with pytest.raises(BudgetExceeded):
            xy_path_lengths(Graph(17), 0, 1, OracleCaps(enumeration_cap=16))

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=0, max_value=10**6), st.integers(3, 8))
    def test_matches_naive_hypothesis(self, seed, n):
        g = random_graph(seed, n, 0.5)
        assert xy_path_lengths(g, 0, n - 1) == naive_xy_path_lengths(g, 0, n - 1)


class TestCapsFromEnv:
    def test_env_var_overrides_size_caps(self, monkeypatch):
        from pancyclic.oracles import ORACLE_CAP_ENV, caps_from_env

        monkeypatch.setenv(ORACLE_CAP_ENV, "8")
        caps = caps_from_env()
        assert caps.alpha_cap == 8 and caps.spectrum_cap == 8
        with pytest.raises(CapExceeded):
            independence_number(Graph(9), caps)

    def test_defaults_without_env(self, monkeypatch):
        from pancyclic.oracles import ORACLE_CAP_ENV, caps_from_env

        monkeypatch.delenv(ORACLE_CAP_ENV, raising=False)
        caps = caps_from_env()
        assert caps.alpha_cap == 64 and caps.spectrum_cap == 16
