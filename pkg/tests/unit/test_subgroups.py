"""
Unit tests for centralizers, normalizers, centers, Sylow 2-subgroups and
2-central involutions.
"""

import pytest

from shortwords.errors import DegreeMismatchError, OrderExceedsLimitError
from shortwords.perm import (
    GeneratorSet,
    PermGroup,
    cycle_type,
    random_element,
    subgroup_eq,
    subgroup_leq,
)
from shortwords.structure import (
    center,
    centralizer,
    conjugacy_classes,
    conjugate,
    normalizer,
    sylow2,
    two_central_involutions,
    two_part,
)
from shortwords.structure.subgroups import is_power_of_two
from tests.utils.helpers import commute, group_of, is_two_group, perm, symmetric_gens


@pytest.mark.unit
class TestCentralizerNormalizerCenter:
    def test_centralizer_of_double_transposition(self, s4):
        x = perm("(1,2)(3,4)", 4)
        c = centralizer(s4, x)
        assert c.order == 8
        assert all(commute(g, x) for g in c.elements())

    def test_centralizer_of_identity_is_everything(self, a4):
        assert subgroup_eq(centralizer(a4, a4.identity()), a4)

    def test_normalizer_of_three_cycle(self, s4):
        n = normalizer(s4, group_of(4, "(1,2,3)"))
        assert n.order == 6
        assert not n.contains(perm("(1,4)", 4))

    def test_normalizer_of_normal_subgroup(self, s4, a4):
        assert normalizer(s4, a4).order == 24

    def test_center(self, s4, d8, c4):
        assert center(s4).is_trivial()
        assert center(d8).order == 2
        assert center(d8).contains(perm("(1,3)(2,4)", 4))
        assert subgroup_eq(center(c4), c4)

    @pytest.mark.parametrize("seed", range(5))
    def test_centralizer_matches_brute_force(self, seed):
        group = PermGroup(symmetric_gens(6))
        x = random_element(group, seed)
        expected = {g for g in group.elements() if commute(g, x)}
        assert set(centralizer(group, x).elements()) == expected

    @pytest.mark.parametrize("seed", range(5))
    def test_normalizer_matches_brute_force(self, seed):
        group = PermGroup(symmetric_gens(6))
        h = PermGroup(GeneratorSet(6, (random_element(group, seed),)))
        members = h.elements()
        expected = {
            g for g in group.elements() if all(h.contains(conjugate(y, g)) for y in members)
        }
        assert set(normalizer(group, h).elements()) == expected

    def test_normalizer_of_sylow_matches_brute_force(self):
        group = PermGroup(symmetric_gens(6))
        p = sylow2(group)
        members = p.elements()
        expected = {
            g for g in group.elements() if all(p.contains(conjugate(y, g)) for y in members)
        }
        assert set(normalizer(group, p).elements()) == expected

    def test_degree_mismatch(self, s4):
        with pytest.raises(DegreeMismatchError):
            centralizer(s4, perm("(1,2)", 5))

    def test_limit(self, s8_gens):
        with pytest.raises(OrderExceedsLimitError):
            centralizer(PermGroup(s8_gens), perm("(1,2)", 8), limit=500)


@pytest.mark.unit
class TestSylow2:
    @pytest.mark.parametrize("n, expected", [(3, 2), (4, 8), (5, 8), (6, 16), (7, 16)])
    def test_symmetric_groups(self, n, expected):
        group = PermGroup(symmetric_gens(n))
        p = sylow2(group)
        assert p.order == expected == two_part(group.order)
        assert subgroup_leq(p, group)
        assert is_two_group(p.elements())

    def test_two_group_is_its_own_sylow(self, c4):
        assert subgroup_eq(sylow2(c4), c4)

    def test_odd_order_gives_trivial(self):
        assert sylow2(group_of(3, "(1,2,3)")).is_trivial()

    def test_deterministic(self, s4):
        first, second = sylow2(s4), sylow2(s4)
        assert first.generators == second.generators

    def test_conjugates_have_the_same_order(self):
        group = PermGroup(symmetric_gens(6))
        p = sylow2(group)
        for seed in range(20):
            g = random_element(group, seed)
            q = PermGroup(GeneratorSet(6, tuple(conjugate(h, g) for h in p.generators)))
            assert q.order == p.order
            assert subgroup_leq(q, group)
            assert is_two_group(q.elements())


@pytest.mark.unit
class TestTwoCentralInvolutions:
    def test_s4_double_transpositions(self, s4):
        classes = two_central_involutions(s4)
        assert len(classes) == 1
        assert cycle_type(classes[0].representative) == (2, 2)
        assert classes[0].centralizer_order == 8

    def test_cyclic_of_order_two(self):
        classes = two_central_involutions(group_of(2, "(1,2)"))
        assert [c.representative for c in classes] == [perm("(1,2)", 2)]

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_central_in_a_sylow_subgroup_of_the_centralizer(self, n):
        group = PermGroup(symmetric_gens(n))
        table = conjugacy_classes(group)
        chosen = {c.name for c in two_central_involutions(group, table=table)}
        assert chosen
        for c in table.classes:
            if c.element_order != 2:
                continue
            z = c.representative
            p = sylow2(centralizer(group, z))
            assert center(p).contains(z)
            assert (p.order == two_part(group.order)) == (c.name in chosen)

    def test_odd_order(self):
        assert two_central_involutions(group_of(5, "(1,2,3,4,5)")) == []

    def test_reuses_class_table(self, d8):
        table = conjugacy_classes(d8)
        classes = two_central_involutions(d8, table=table)
        assert [c.size for c in classes] == [1]


@pytest.mark.unit
class TestHelpers:
    @pytest.mark.parametrize("n, expected", [(1, 1), (24, 8), (720, 16), (7, 1)])
    def test_two_part(self, n, expected):
        assert two_part(n) == expected

    def test_is_power_of_two(self):
        assert is_power_of_two(1)
        assert is_power_of_two(64)
        assert not is_power_of_two(0)
        assert not is_power_of_two(12)
