"""
Maximal elementary abelian normal subgroups of a 2-group.
"""

import logging
from collections.abc import Iterable

from ..config import DEFAULT_ELEMENT_LIMIT
from ..errors import CheckerPreconditionError, NotATwoGroupError
from ..perm.generators import GeneratorSet
from ..perm.group import PermGroup, subgroup_leq
from ..perm.permutation import Permutation, compose, perm_order
from .classes import conjugate
from .subgroups import is_power_of_two

logger = logging.getLogger(__name__)


def is_elementary_abelian(group: PermGroup) -> bool:
    """Every generator squares to 1 and all generators commute."""
    gens = group.generators
    if any(perm_order(g) > 2 for g in gens):
        return False
    return all(compose(a, b) == compose(b, a) for i, a in enumerate(gens) for b in gens[i + 1 :])


def is_normal(group: PermGroup, subgroup: PermGroup) -> bool:
    """Closed under conjugation by the generators of group."""
    return all(
        subgroup.contains(conjugate(h, g)) for g in group.generators for h in subgroup.generators
    )


def normal_closure(group: PermGroup, elements: Iterable[Permutation]) -> PermGroup:
    """Smallest subgroup normalized by group that contains elements."""
    gens = list(elements)
    closure = PermGroup(GeneratorSet(group.degree, tuple(gens)))
    grown = True
    while grown:
        grown = False
        for h in closure.generators:
            for g in group.generators:
                image = conjugate(h, g)
                if not closure.contains(image):
                    gens.append(image)
                    closure = PermGroup(GeneratorSet(group.degree, tuple(gens)))
                    grown = True
    return closure


def _check_two_group(group: PermGroup, limit: int):
    if not is_power_of_two(group.order):
        raise NotATwoGroupError(f"group order {group.order} is not a power of 2")
    # enumerates or raises OrderExceedsLimitError
    group.elements(limit)


def _extensions(
    group: PermGroup, elements: list[Permutation], v: PermGroup
) -> Iterable[PermGroup]:
    """Elementary abelian normal subgroups <V, t>^S for involutions t in C_S(V) outside V."""
    for t in elements:
        if perm_order(t) != 2 or v.contains(t):
            continue
        if any(compose(t, h) != compose(h, t) for h in v.generators):
            continue
        w = normal_closure(group, v.generators + (t,))
        if is_elementary_abelian(w):
            yield w


def maximal_elementary_abelian_normals(
    group: PermGroup, limit: int = DEFAULT_ELEMENT_LIMIT
) -> list[PermGroup]:
    """
    All maximal elementary abelian normal subgroups of a 2-group.

    Depth-first extension from the trivial subgroup; subgroups are deduplicated
    by their element sets and reported in discovery order.

    Raises:
        NotATwoGroupError: If |group| is not a power of 2
        OrderExceedsLimitError: If |group| exceeds limit
    """
    _check_two_group(group, limit)
    elements = group.elements(limit)
    visited: set[frozenset[Permutation]] = set()
    maximal: list[PermGroup] = []

    def extend(v: PermGroup):
        leaf = True
        for w in _extensions(group, elements, v):
            leaf = False
            key = frozenset(w.iter_elements())
            if key not in visited:
                visited.add(key)
                extend(w)
        if leaf:
            maximal.append(v)

    extend(PermGroup.trivial(group.degree))
    logger.info(f"Found {len(maximal)} maximal elementary abelian normal subgroups")
    return maximal


def is_maximal_el_ab_normal(
    group: PermGroup, v: PermGroup, limit: int = DEFAULT_ELEMENT_LIMIT
) -> bool:
    """
    True iff V has no proper elementary abelian normal overgroup in S.

    Raises:
        CheckerPreconditionError: If V is not an elementary abelian normal subgroup of S
        NotATwoGroupError: If |S| is not a power of 2
    """
    _check_two_group(group, limit)
    if not subgroup_leq(v, group):
        raise CheckerPreconditionError("V is not a subgroup of S")
    if not is_elementary_abelian(v):
        raise CheckerPreconditionError("V is not elementary abelian")
    if not is_normal(group, v):
        raise CheckerPreconditionError("V is not normal in S")
    return next(iter(_extensions(group, group.elements(limit), v)), None) is None
