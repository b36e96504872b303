"""
Unit tests for the two-step strategies (shortwords/search/two_step.py).
"""

import logging

import pytest

from shortwords.errors import (
    ChainViolatedError,
    ElementNotContainedError,
    TargetNotCoveredError,
)
from shortwords.perm import GeneratorSet, PermGroup, Permutation, random_element, subgroup_eq
from shortwords.search import (
    SearchStatus,
    ShortGensOptions,
    auto_intermediate_for_element,
    auto_intermediate_for_subgroup,
    flatten_powered_word,
    lookup_word,
    two_step_get_short_gens,
    two_step_lookup_word,
)
from shortwords.structure import centralizer
from shortwords.words import PoweredWord
from tests.utils.helpers import group_of, perm, symmetric_gens

KLEIN = ("(1,2)(3,4)", "(1,3)(2,4)")


def t_generators(result) -> GeneratorSet:
    return GeneratorSet(result.step_one.elements[0].degree, result.step_one.elements)


def assert_faithful_flattening(gens: GeneratorSet, result):
    t_gens = t_generators(result)
    for nested, flat in zip(result.nested_words, result.flattened, strict=True):
        assert nested.evaluate(t_gens) == flat.evaluate(gens)


@pytest.mark.unit
class TestFlattenPoweredWord:
    def test_substitutes_defining_words(self):
        defining = [PoweredWord((2, 1), 3), PoweredWord((1,), 1)]
        flat = flatten_powered_word(PoweredWord((2, 1), 4), defining)
        assert flat == PoweredWord((1, 2, 1, 2, 1, 2, 1), 4)

    def test_single_letter_keeps_the_defining_word(self):
        defining = [PoweredWord((2, 1, 2, 2, 2, 2), 5), PoweredWord((1,), 1)]
        assert flatten_powered_word(PoweredWord((1,), 1), defining) == defining[0]
        assert flatten_powered_word(PoweredWord((2,), 1), defining) == defining[1]

    def test_single_letter_power_multiplies_exponents(self, s4_gens):
        defining = [PoweredWord((2, 1), 3), PoweredWord((2,), 1)]
        flat = flatten_powered_word(PoweredWord((1,), 2), defining)
        assert flat == PoweredWord((2, 1), 6)
        t_gens = GeneratorSet(4, tuple(pw.evaluate(s4_gens) for pw in defining))
        assert flat.evaluate(s4_gens) == PoweredWord((1,), 2).evaluate(t_gens)

    def test_empty(self):
        assert flatten_powered_word(PoweredWord((), 1), []) == PoweredWord((), 1)


@pytest.mark.unit
class TestTwoStepGetShortGens:
    def test_klein_through_a4(self, s4_gens, a4):
        target = group_of(4, *KLEIN)
        result = two_step_get_short_gens(s4_gens, a4, target)

        assert result.finished
        assert result.intermediate_order == 12
        flat = [pw.evaluate(s4_gens) for pw in result.flattened]
        assert subgroup_eq(PermGroup(GeneratorSet(4, tuple(flat))), target)
        assert_faithful_flattening(s4_gens, result)
        assert all(text.startswith(("t", "(")) for text in result.nested_rendered)

    def test_equal_subgroups_use_identity_substitution(self, s4_gens, a4, caplog):
        with caplog.at_level(logging.WARNING):
            result = two_step_get_short_gens(s4_gens, a4, a4)
        count = len(result.step_one.powered_words)
        assert result.nested_words == tuple(PoweredWord((i,), 1) for i in range(1, count + 1))
        assert result.flattened == result.step_one.powered_words
        assert "not strict" in caplog.text

    def test_trivial_target(self, s4_gens, a4):
        result = two_step_get_short_gens(s4_gens, a4, PermGroup.trivial(4))
        assert result.flattened == ()
        assert result.step_one is None

    def test_target_outside_intermediate(self, s4_gens, a4):
        with pytest.raises(ChainViolatedError):
            two_step_get_short_gens(s4_gens, a4, group_of(4, "(1,2)"))

    def test_intermediate_outside_group(self, a4):
        s4 = PermGroup(symmetric_gens(4))
        with pytest.raises(TargetNotCoveredError):
            two_step_get_short_gens(a4.gens, s4, group_of(4, *KLEIN))

    def test_unfinished_step_one(self, s4_gens, a4):
        opts = ShortGensOptions(order_restriction={4}, iteration_limit=1)
        result = two_step_get_short_gens(s4_gens, a4, group_of(4, *KLEIN), opts)
        assert result.status is SearchStatus.UNFINISHED
        assert result.flattened == ()

    @pytest.mark.slow
    def test_random_chains_in_s6(self):
        """S = <x> and T = N_G(S) for 20 seeded elements of S6."""
        gens = symmetric_gens(6)
        group = PermGroup(gens)
        for seed in range(20):
            x = random_element(group, seed)
            target = PermGroup(GeneratorSet(6, (x,)))
            intermediate = auto_intermediate_for_subgroup(gens, target)
            result = two_step_get_short_gens(gens, intermediate, target)
            assert result.finished
            flat = tuple(pw.evaluate(gens) for pw in result.flattened)
            assert subgroup_eq(PermGroup(GeneratorSet(6, flat)), target)
            if result.step_one is not None:
                assert_faithful_flattening(gens, result)

    def test_to_dict(self, s4_gens, a4):
        data = two_step_get_short_gens(s4_gens, a4, group_of(4, *KLEIN)).to_dict()
        assert data["intermediate_order"] == 12
        assert data["status"] == "finished"
        assert data["words"]


@pytest.mark.unit
class TestTwoStepLookupWord:
    def test_involution_through_its_centralizer(self):
        gens = symmetric_gens(6)
        x = perm("(1,4)(2,5)", 6)
        intermediate = auto_intermediate_for_element(gens, x)
        assert subgroup_eq(intermediate, centralizer(PermGroup(gens), x))

        result = two_step_lookup_word(gens, intermediate, x)
        assert result.flattened[0].evaluate(gens) == x
        assert_faithful_flattening(gens, result)

    def test_identity(self, s4_gens, a4):
        result = two_step_lookup_word(s4_gens, a4, Permutation.identity(4))
        assert result.rendered == ("Id($)",)
        assert result.flattened == (PoweredWord((), 1),)

    def test_whole_group_is_plain_lookup(self, s8_gens):
        x = perm("(2,8,7,6,4,3)", 8)
        result = two_step_lookup_word(s8_gens, PermGroup(s8_gens), x)
        assert result.step_one is None
        assert result.flattened == (lookup_word(s8_gens, x).powered_word,)

    def test_element_outside_intermediate(self, s4_gens, a4):
        with pytest.raises(ElementNotContainedError):
            two_step_lookup_word(s4_gens, a4, perm("(1,2)", 4))
