import pytest

from pancyclic.core import validate_cycle
from pancyclic.errors import InvalidK
from pancyclic.generators import (
    BoundedAlphaInstance,
    ExtremalSpec,
    GeneratorConfig,
    gen_extremal,
    gen_random_bounded_alpha,
)
from pancyclic.oracles import cycle_of_length, hamilton_cycle, independence_number


class TestExtremalSpec:
    def test_k3_dimensions(self):
        spec = ExtremalSpec(3)
        g = spec.graph()
        assert g.n == 12
        assert g.m == 3 * 6 + 3  # three 4-cliques plus three connectors

    def test_k2_degenerates_to_c4(self):
        spec = ExtremalSpec(2)
        g = spec.graph()
        assert g.n == 4 and g.m == 4
        assert hamilton_cycle(g) is not None
        assert independence_number(g)[0] == 2
        assert spec.present_lengths() == {4}

    def test_rejects_small_k(self):
        with pytest.raises(InvalidK):
            gen_extremal(1)

    def test_k3_alpha_and_hamiltonicity(self):
        spec = ExtremalSpec(3)
        g = spec.graph()
        assert independence_number(g)[0] == 3
        assert validate_cycle(g, spec.hamilton_cycle())
        assert spec.hamilton_cycle().length == 12
        found = hamilton_cycle(g)  # independent search confirms
        assert found is not None and validate_cycle(g, found)

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_constructed_witnesses_validate(self, k):
        spec = ExtremalSpec(k)
        g = spec.graph()
        for ell in range(3, spec.n + 1):
            w = spec.cycle_witness(ell)
            if ell in spec.present_lengths():
                assert w is not None and w.length == ell
                assert validate_cycle(g, w)
            else:
                assert w is None

    def test_k3_missing_length_is_absent(self):
        g = gen_extremal(3)
        assert cycle_of_length(g, 5) is None  # exhaustive search agrees

    def test_labels(self):
        spec = ExtremalSpec(3)
        assert spec.a(0) == 0 and spec.b(0) == 1
        assert spec.a(1) == 4 and spec.b(1) == 5
        assert spec.graph().has_edge(spec.a(2), spec.b(0))  # wraparound connector


class TestRandomBoundedAlpha:
    def test_k1_is_complete(self):
        inst = gen_random_bounded_alpha(GeneratorConfig(n=10, k=1, seed=0))
        assert inst.graph.m == 45
        assert inst.alpha == 1

    def test_verified_alpha(self):
        inst = gen_random_bounded_alpha(GeneratorConfig(n=14, k=2, seed=7))
        assert inst.alpha <= 2
        assert len(inst.independent_set) == inst.alpha
        assert validate_cycle(inst.graph, inst.planted)

    def test_k3_planted(self):
        inst = gen_random_bounded_alpha(GeneratorConfig(n=6, k=3, seed=11))
        assert inst.alpha <= 3
        assert inst.planted.length == 6

    def test_seed_determinism(self):
        cfg = GeneratorConfig(n=16, k=2, seed=123)
        a = gen_random_bounded_alpha(cfg)
        b = gen_random_bounded_alpha(cfg)
        assert a.graph == b.graph
        assert a.planted == b.planted
        assert a.independent_set == b.independent_set

    def test_different_seeds_differ(self):
        a = gen_random_bounded_alpha(GeneratorConfig(n=16, k=2, seed=1))
        b = gen_random_bounded_alpha(GeneratorConfig(n=16, k=2, seed=2))
        assert a.graph != b.graph

    def test_instance_is_dataclass(self):
        inst = gen_random_bounded_alpha(GeneratorConfig(n=8, k=2, seed=5))
        assert isinstance(inst, BoundedAlphaInstance)


class TestExtremalHoles:
    @pytest.mark.parametrize("k", [2, 3])
    def test_missing_length_reproved_by_exhaustion(self, k):
        spec = ExtremalSpec(k)
        g = spec.graph()
        assert cycle_of_length(g, 2 * k - 1) is None
        assert 2 * k - 1 not in spec.present_lengths()
