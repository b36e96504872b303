"""
Conjugacy classes, power maps and conjugacy tests by brute force.

Conjugation is x^g = g^-1 * x * g with left-to-right products.
"""

import logging
from dataclasses import dataclass, field
from string import ascii_uppercase

from sympy import isprime, primefactors

from ..config import DEFAULT_ELEMENT_LIMIT
from ..errors import DegreeMismatchError, ElementNotContainedError, OrderExceedsLimitError
from ..perm.group import PermGroup
from ..perm.permutation import Permutation, compose, cycle_type, inverse, perm_order, power

logger = logging.getLogger(__name__)


def conjugate(x: Permutation, g: Permutation) -> Permutation:
    """x^g = g^-1 * x * g."""
    return compose(compose(inverse(g), x), g)


def _conjugation_orbit(
    group: PermGroup, x: Permutation, limit: int
) -> dict[Permutation, Permutation]:
    """Orbit of x under conjugation, each point mapped to a witness g with x^g = point."""
    witnesses = {x: group.identity()}
    queue = [x]
    for z in queue:
        w = witnesses[z]
        for s in group.generators:
            image = conjugate(z, s)
            if image not in witnesses:
                witnesses[image] = compose(w, s)
                queue.append(image)
                if len(witnesses) > limit:
                    raise OrderExceedsLimitError(group.order, limit)
    return witnesses


def conjugacy_class_of(
    group: PermGroup, x: Permutation, limit: int = DEFAULT_ELEMENT_LIMIT
) -> frozenset[Permutation]:
    """
    The G-class of x.

    Raises:
        OrderExceedsLimitError: If the class has more than limit elements
    """
    if x.degree != group.degree:
        raise DegreeMismatchError(f"degree {x.degree} does not match group degree {group.degree}")
    return frozenset(_conjugation_orbit(group, x, limit))


@dataclass(frozen=True)
class ConjugacyResult:
    """Outcome of are_conjugate; truthy iff conjugate. witness satisfies x^witness == y."""

    conjugate: bool
    witness: Permutation | None = None

    def __bool__(self) -> bool:
        return self.conjugate


def are_conjugate(
    group: PermGroup, x: Permutation, y: Permutation, limit: int = DEFAULT_ELEMENT_LIMIT
) -> ConjugacyResult:
    """
    Decide whether g^-1 x g = y for some g in group.

    Raises:
        ElementNotContainedError: If x or y is not in group
        OrderExceedsLimitError: If |group| exceeds limit
    """
    for element in (x, y):
        if not group.contains(element):
            raise ElementNotContainedError(f"{element} is not in the group")
    if group.order > limit:
        raise OrderExceedsLimitError(group.order, limit)

    if cycle_type(x) != cycle_type(y):
        return ConjugacyResult(False)
    if x == y:
        return ConjugacyResult(True, group.identity())

    witnesses = _conjugation_orbit(group, x, limit)
    if y in witnesses:
        return ConjugacyResult(True, witnesses[y])
    return ConjugacyResult(False)


# ============================================================================
# Class tables
# ============================================================================


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Permutation
    size: int
    centralizer_order: int
    element_order: int
    name: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "representative": str(self.representative),
            "size": self.size,
            "centralizer_order": self.centralizer_order,
            "element_order": self.element_order,
        }


def _letters(n: int) -> str:
    """0 -> A, 25 -> Z, 26 -> AA, 27 -> BB, ..."""
    return ascii_uppercase[n % 26] * (n // 26 + 1)


@dataclass(frozen=True)
class ClassTable:
    """
    Conjugacy classes in ATLAS order (element order, then first appearance).

    Class indices are 1-based; power_maps[p][i] is the class of the p-th power
    of class i's representative.
    """

    group_order: int
    classes: tuple[ConjugacyClass, ...]
    power_maps: dict[int, dict[int, int]]
    _class_of: dict[Permutation, int] = field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.classes)

    def __getitem__(self, index: int) -> ConjugacyClass:
        return self.classes[index - 1]

    def class_index(self, x: Permutation) -> int:
        try:
            return self._class_of[x]
        except KeyError:
            raise ElementNotContainedError(f"{x} is not in the group") from None

    def class_name(self, index: int) -> str:
        return self.classes[index - 1].name

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.classes)


def conjugacy_classes(group: PermGroup, limit: int = DEFAULT_ELEMENT_LIMIT) -> ClassTable:
    """
    All conjugacy classes of group by conjugation orbits of its elements.

    Each representative is the first class member in enumeration order.

    Raises:
        OrderExceedsLimitError: If |group| exceeds limit
    """
    elements = group.elements(limit)
    position = {e: i for i, e in enumerate(elements)}
    found: list[tuple[Permutation, frozenset[Permutation]]] = []
    seen: set[Permutation] = set()

    for e in elements:
        if e in seen:
            continue
        orbit = frozenset(_conjugation_orbit(group, e, limit))
        seen |= orbit
        found.append((e, orbit))

    found.sort(key=lambda item: (perm_order(item[0]), position[item[0]]))

    letter_counts: dict[int, int] = {}
    classes = []
    class_of: dict[Permutation, int] = {}
    for index, (rep, orbit) in enumerate(found, start=1):
        order = perm_order(rep)
        n = letter_counts.get(order, 0)
        letter_counts[order] = n + 1
        classes.append(
            ConjugacyClass(
                representative=rep,
                size=len(orbit),
                centralizer_order=group.order // len(orbit),
                element_order=order,
                name=f"{order}{_letters(n)}",
            )
        )
        for member in orbit:
            class_of[member] = index

    power_maps = {
        p: {i: class_of[power(c.representative, p)] for i, c in enumerate(classes, start=1)}
        for p in primefactors(group.order)
    }
    logger.info(f"Found {len(classes)} conjugacy classes in a group of order {group.order}")
    return ClassTable(group.order, tuple(classes), power_maps, class_of)


def power_map(table: ClassTable, p: int) -> dict[int, int]:
    """
    Class of the p-th power of each class representative.

    Raises:
        ValueError: If p is not prime
    """
    if not isprime(p):
        raise ValueError(f"{p} is not a prime")
    if p in table.power_maps:
        return dict(table.power_maps[p])
    return {
        i: table.class_index(power(c.representative, p))
        for i, c in enumerate(table.classes, start=1)
    }
