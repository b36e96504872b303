"""
Centralizers, normalizers, centers, Sylow 2-subgroups and 2-central involutions.

Everything here filters the enumerated elements of the ambient group, so every
function is guarded by an element limit.
"""

import logging

from sympy import multiplicity

from ..config import DEFAULT_ELEMENT_LIMIT
from ..errors import DegreeMismatchError
from ..perm.group import PermGroup, join, subgroup_from_elements
from ..perm.permutation import Permutation, compose, perm_order
from .classes import ClassTable, ConjugacyClass, conjugacy_classes, conjugate

logger = logging.getLogger(__name__)


def is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def two_part(n: int) -> int:
    """Largest power of 2 dividing n."""
    return 2 ** multiplicity(2, n)


def _check_degree(group: PermGroup, degree: int):
    if degree != group.degree:
        raise DegreeMismatchError(f"degree {degree} does not match group degree {group.degree}")


def _normalizes(g: Permutation, subgroup: PermGroup) -> bool:
    return all(subgroup.contains(conjugate(h, g)) for h in subgroup.generators)


def centralizer(
    group: PermGroup, x: Permutation, limit: int = DEFAULT_ELEMENT_LIMIT
) -> PermGroup:
    """C_G(x)."""
    _check_degree(group, x.degree)
    return subgroup_from_elements(
        group.degree, (g for g in group.elements(limit) if compose(x, g) == compose(g, x))
    )


def normalizer(
    group: PermGroup, subgroup: PermGroup, limit: int = DEFAULT_ELEMENT_LIMIT
) -> PermGroup:
    """N_G(H); H need not lie in G."""
    _check_degree(group, subgroup.degree)
    return subgroup_from_elements(
        group.degree, (g for g in group.elements(limit) if _normalizes(g, subgroup))
    )


def center(group: PermGroup, limit: int = DEFAULT_ELEMENT_LIMIT) -> PermGroup:
    """Z(G)."""
    gens = group.generators
    return subgroup_from_elements(
        group.degree,
        (g for g in group.elements(limit) if all(compose(g, s) == compose(s, g) for s in gens)),
    )


def sylow2(group: PermGroup, limit: int = DEFAULT_ELEMENT_LIMIT) -> PermGroup:
    """
    A Sylow 2-subgroup, grown from the trivial group.

    While P is too small, P is extended by the least element (in enumeration
    order) of 2-power order in N_G(P) outside P.

    Raises:
        OrderExceedsLimitError: If |group| exceeds limit
    """
    elements = group.elements(limit)
    wanted = two_part(group.order)
    p = PermGroup.trivial(group.degree)

    while p.order < wanted:
        for x in elements:
            if p.contains(x) or not is_power_of_two(perm_order(x)) or not _normalizes(x, p):
                continue
            candidate = join(p, extra=(x,))
            if is_power_of_two(candidate.order):
                p = candidate
                logger.debug(f"Sylow 2-subgroup grown to order {p.order}")
                break
        else:
            raise AssertionError("no 2-element in N_G(P) outside P")  # pragma: no cover

    return p


def two_central_involutions(
    group: PermGroup, limit: int = DEFAULT_ELEMENT_LIMIT, table: ClassTable | None = None
) -> list[ConjugacyClass]:
    """
    Classes of involutions whose centralizer holds a full Sylow 2-subgroup.

    Args:
        group: Ambient group
        limit: Element limit
        table: Precomputed class table of group, if any
    """
    table = table or conjugacy_classes(group, limit)
    valuation = multiplicity(2, group.order)
    return [
        c
        for c in table.classes
        if c.element_order == 2 and multiplicity(2, c.centralizer_order) == valuation
    ]
