"""
Unit tests for conjugacy classes, power maps and class table rows.
"""

import itertools

import pytest

from shortwords.errors import ElementNotContainedError, OrderExceedsLimitError
from shortwords.perm import PermGroup, Permutation, cycle_type, power
from shortwords.search import LookupOptions
from shortwords.structure import (
    are_conjugate,
    conjugacy_class_of,
    conjugacy_classes,
    conjugate,
    power_map,
)
from shortwords.structure.tables import class_table_rows
from shortwords.words import parse_word
from tests.utils.helpers import (
    alternating_gens,
    conjugation_orbit,
    gens_of,
    group_of,
    perm,
    symmetric_gens,
)


def class_of_cycle_type(table, shape):
    return next(i for i in range(1, len(table) + 1) if cycle_type(table[i].representative) == shape)


@pytest.mark.unit
class TestConjugacyClasses:
    def test_s4(self, s4):
        table = conjugacy_classes(s4)
        assert len(table) == 5
        assert sorted(c.size for c in table.classes) == [1, 3, 6, 6, 8]
        assert sorted(c.centralizer_order for c in table.classes) == [3, 4, 4, 8, 24]

    def test_atlas_names(self, s4):
        table = conjugacy_classes(s4)
        assert table.names == ("1A", "2A", "2B", "3A", "4A")
        assert [c.element_order for c in table.classes] == [1, 2, 2, 3, 4]
        assert table[1].representative.is_identity()
        assert table.class_name(5) == "4A"

    def test_trivial_group(self):
        table = conjugacy_classes(PermGroup.trivial(3))
        assert len(table) == 1
        assert table[1].size == 1
        assert table.power_maps == {}

    def test_cyclic_group(self, c4):
        table = conjugacy_classes(c4)
        assert len(table) == 4
        assert all(c.size == 1 for c in table.classes)
        assert table.names == ("1A", "2A", "4A", "4B")
        four_cycle = table.class_index(perm("(1,2,3,4)", 4))
        assert table.power_maps[2][four_cycle] == table.class_index(perm("(1,3)(2,4)", 4))

    @pytest.mark.parametrize(
        "gens",
        [symmetric_gens(4), symmetric_gens(5), alternating_gens(5)],
        ids=["S4", "S5", "A5"],
    )
    def test_class_equation(self, gens):
        group = PermGroup(gens)
        table = conjugacy_classes(group)
        assert sum(c.size for c in table.classes) == group.order
        for c in table.classes:
            assert c.size * c.centralizer_order == group.order
        for a, b in itertools.combinations(table.classes, 2):
            assert not are_conjugate(group, a.representative, b.representative)

    def test_class_equation_d8(self, d8):
        table = conjugacy_classes(d8)
        assert len(table) == 5
        assert sum(c.size for c in table.classes) == 8

    def test_a5_splits_five_cycles(self):
        table = conjugacy_classes(PermGroup(alternating_gens(5)))
        assert table.names == ("1A", "2A", "3A", "5A", "5B")

    def test_sizes_match_brute_force_orbits(self, s4):
        elements = s4.elements()
        table = conjugacy_classes(s4)
        for c in table.classes:
            assert len(conjugation_orbit(elements, c.representative)) == c.size

    def test_representative_is_first_in_enumeration(self, s4):
        elements = s4.elements()
        table = conjugacy_classes(s4)
        for c in table.classes:
            members = conjugacy_class_of(s4, c.representative)
            assert c.representative == next(e for e in elements if e in members)

    def test_class_index_outside_group(self, a4):
        table = conjugacy_classes(a4)
        with pytest.raises(ElementNotContainedError):
            table.class_index(perm("(1,2)", 4))

    def test_limit(self, s8_gens):
        with pytest.raises(OrderExceedsLimitError):
            conjugacy_classes(PermGroup(s8_gens), limit=1000)

    def test_to_dict(self, s4):
        data = conjugacy_classes(s4)[3].to_dict()
        assert data["name"] == "2B"
        assert data["size"] * data["centralizer_order"] == 24


@pytest.mark.unit
class TestPowerMaps:
    def test_squaring_four_cycles(self, s4):
        table = conjugacy_classes(s4)
        four_cycles = class_of_cycle_type(table, (4,))
        double_transpositions = class_of_cycle_type(table, (2, 2))
        assert power_map(table, 2)[four_cycles] == double_transpositions

    @pytest.mark.parametrize(
        "gens",
        [
            symmetric_gens(4),
            symmetric_gens(5),
            alternating_gens(5),
            gens_of(4, "(1,2,3,4)", "(1,3)"),
        ],
        ids=["S4", "S5", "A5", "D8"],
    )
    def test_maps_are_certified_by_conjugacy(self, gens):
        group = PermGroup(gens)
        elements = group.elements()
        table = conjugacy_classes(group)
        for p in (2, 3, 5):
            mapping = power_map(table, p)
            assert sorted(mapping) == list(range(1, len(table) + 1))
            for i, j in mapping.items():
                image = power(table[i].representative, p)
                assert are_conjugate(group, image, table[j].representative)
                assert image in conjugation_orbit(elements, table[j].representative)

    def test_coprime_prime_permutes_classes(self, s4):
        table = conjugacy_classes(s4)
        mapping = power_map(table, 5)
        assert mapping[1] == 1
        assert sorted(mapping.values()) == list(range(1, len(table) + 1))

    def test_identity_class_is_fixed(self, d8):
        table = conjugacy_classes(d8)
        assert all(power_map(table, p)[1] == 1 for p in (2, 3, 7))

    def test_only_primes(self, s4):
        with pytest.raises(ValueError):
            power_map(conjugacy_classes(s4), 4)


@pytest.mark.unit
class TestAreConjugate:
    def test_transpositions_in_s4(self, s4):
        x, y = perm("(1,2)", 4), perm("(3,4)", 4)
        result = are_conjugate(s4, x, y)
        assert result
        assert conjugate(x, result.witness) == y

    def test_three_cycles_split_in_a4(self, a4):
        assert not are_conjugate(a4, perm("(1,2,3)", 4), perm("(1,3,2)", 4))

    def test_same_element(self, d8):
        x = perm("(1,3)", 4)
        result = are_conjugate(d8, x, x)
        assert result.witness.is_identity()

    def test_cycle_type_prefilter(self, s4):
        assert not are_conjugate(s4, perm("(1,2)", 4), perm("(1,2)(3,4)", 4))

    def test_not_contained(self, a4):
        with pytest.raises(ElementNotContainedError):
            are_conjugate(a4, perm("(1,2)", 4), perm("(3,4)", 4))

    def test_limit(self, s8_gens):
        with pytest.raises(OrderExceedsLimitError):
            are_conjugate(PermGroup(s8_gens), perm("(1,2)", 8), perm("(3,4)", 8), limit=100)

    def test_conjugation_convention(self):
        x, g = perm("(1,2)", 3), perm("(1,2,3)", 3)
        # g^-1 x g moves g(1) and g(2)
        assert conjugate(x, g) == perm("(2,3)", 3)


@pytest.mark.unit
class TestClassTableRows:
    def test_words_evaluate_to_representatives(self, s4_gens, s4):
        table = conjugacy_classes(s4)
        rows = class_table_rows(table, s4_gens)
        assert [row.name for row in rows] == list(table.names)
        for row, c in zip(rows, table.classes, strict=True):
            assert parse_word(row.word, s4_gens.names).evaluate(s4_gens) == c.representative
            assert set(row.powers) == {2, 3}

    def test_identity_row(self, s4_gens, s4):
        row = class_table_rows(conjugacy_classes(s4), s4_gens, LookupOptions())[0]
        assert row.word == "Id($)"
        assert row.to_dict()["powers"] == {"2P": "1A", "3P": "1A"}

    def test_identity_word_evaluates(self, s4_gens):
        assert parse_word("Id($)", s4_gens.names).evaluate(s4_gens) == Permutation.identity(4)
