"""
Unit tests for coset actions (shortwords/perm/cosets.py).
"""

import random

import pytest

from shortwords.errors import IndexExceedsLimitError, NotASubgroupError
from shortwords.perm import GeneratorSet, PermGroup, compose, coset_action, random_element
from tests.utils.helpers import group_of, random_perm


@pytest.mark.unit
class TestCosetAction:
    def test_point_stabilizer_gives_natural_action(self, s4):
        result = coset_action(s4, group_of(4, "(2,3)", "(3,4)"))
        assert result.degree == 4
        assert result.kernel_order == 1
        assert result.is_faithful
        assert result.image.order == 24

    def test_alternating_subgroup_gives_sign(self, s4, a4):
        result = coset_action(s4, a4)
        assert result.degree == 2
        assert result.kernel_order == 12
        assert result.image.order == 2
        assert not result.is_faithful

    def test_first_point_is_the_subgroup(self, s4, a4):
        result = coset_action(s4, a4)
        assert result.point_to_coset[1].is_identity()

    def test_generator_images_and_names(self, s4):
        result = coset_action(s4, group_of(4, "(2,3)", "(3,4)"))
        assert result.image.gens.names == s4.gens.names
        for g, image in zip(s4.generators, result.image.generators, strict=True):
            assert result.act(g) == image

    def test_random_pairs(self):
        """|kernel| * |image| = |G| and act is a homomorphism."""
        rng = random.Random(17)
        for seed in range(20):
            g = PermGroup(GeneratorSet(6, (random_perm(6, rng), random_perm(6, rng))))
            u = PermGroup(GeneratorSet(6, (random_element(g, seed),)))
            result = coset_action(g, u)
            assert result.kernel_order * result.image.order == g.order
            assert result.degree == g.order // u.order
            x, y = random_element(g, seed + 100), random_element(g, seed + 200)
            assert result.act(compose(x, y)) == compose(result.act(x), result.act(y))

    def test_not_a_subgroup(self, a4):
        with pytest.raises(NotASubgroupError):
            coset_action(a4, group_of(4, "(1,2)"))

    def test_index_limit(self, s4):
        with pytest.raises(IndexExceedsLimitError) as exc_info:
            coset_action(s4, group_of(4, "(2,3)", "(3,4)"), index_limit=3)
        assert exc_info.value.index == 4
