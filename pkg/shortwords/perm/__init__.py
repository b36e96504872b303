"""
Permutation arithmetic and the stabilizer-chain group engine.
"""

from .cosets import CosetActionResult, coset_action
from .generators import GeneratorSet, load_generator_file, parse_generator_text
from .group import (
    PermGroup,
    contains,
    enumerate_elements,
    group_from_generators,
    group_order,
    intersection,
    join,
    subgroup_eq,
    subgroup_from_elements,
    subgroup_leq,
)
from .permutation import (
    Permutation,
    compose,
    cycle_type,
    cycles,
    format_perm,
    inverse,
    parse_perm,
    perm_order,
    power,
)
from .random import ProductReplacer


def random_element(group: PermGroup, rng: ProductReplacer | int = 0) -> Permutation:
    """
    Random member of group.

    Args:
        group: Group to sample from
        rng: A ProductReplacer over the group's generators, or an int seed

    Returns:
        An element of group (always a member; deterministic for a fixed seed)
    """
    if isinstance(rng, int):
        rng = ProductReplacer(group.degree, group.generators, seed=rng)
    return rng.sample()


__all__ = [
    "CosetActionResult",
    "GeneratorSet",
    "PermGroup",
    "Permutation",
    "ProductReplacer",
    "compose",
    "contains",
    "coset_action",
    "cycle_type",
    "cycles",
    "enumerate_elements",
    "format_perm",
    "group_from_generators",
    "group_order",
    "intersection",
    "inverse",
    "join",
    "load_generator_file",
    "parse_generator_text",
    "parse_perm",
    "perm_order",
    "power",
    "random_element",
    "subgroup_eq",
    "subgroup_from_elements",
    "subgroup_leq",
]
