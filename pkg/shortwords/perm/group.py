"""
Permutation groups backed by a deterministic Schreier-Sims stabilizer chain.
"""

import logging
import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from ..config import DEFAULT_ELEMENT_LIMIT
from ..errors import DegreeMismatchError, OrderExceedsLimitError
from .generators import GeneratorSet
from .permutation import Permutation, compose, inverse

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChainLevel:
    """One level of the stabilizer chain (points are 0-based internally)."""

    base_point: int
    strong_gens: tuple[Permutation, ...]
    transversal: dict[int, Permutation]
    inverse_transversal: dict[int, Permutation]


def _first_moved(p: Permutation) -> int:
    for i, j in enumerate(p.array_form):
        if i != j:
            return i
    raise ValueError("identity moves no point")


def _fixes_all(p: Permutation, points: Iterable[int]) -> bool:
    img = p.array_form
    return all(img[b] == b for b in points)


def _orbit_transversal(
    degree: int, point: int, gens: Sequence[Permutation]
) -> dict[int, Permutation]:
    """Breadth-first orbit of point with representatives u such that point^u = orbit point."""
    transversal = {point: Permutation.identity(degree)}
    queue = [point]
    for pt in queue:
        for s in gens:
            img = s.array_form[pt]
            if img not in transversal:
                transversal[img] = compose(transversal[pt], s)
                queue.append(img)
    return transversal


def _sift(
    p: Permutation,
    base: Sequence[int],
    inverse_transversals: Sequence[dict[int, Permutation]],
    start: int = 0,
) -> tuple[Permutation, int]:
    """Strip p through the chain; return the residue and the level where it stopped."""
    for i in range(start, len(base)):
        beta = p.array_form[base[i]]
        u_inv = inverse_transversals[i].get(beta)
        if u_inv is None:
            return p, i
        p = compose(p, u_inv)
    return p, len(base)


def _schreier_sims(
    degree: int, gens: Sequence[Permutation], base_prefix: Sequence[int]
) -> list[ChainLevel]:
    """
    Deterministic Schreier-Sims.

    New base points are the smallest point moved by the strong generator that
    forced the extension, so the chain is reproducible for a given generator order.
    Every Schreier generator is sifted, so the resulting order is exact.
    """
    base = list(base_prefix)
    strong = [g for g in gens if not g.is_identity()]

    for g in strong:
        if _fixes_all(g, base):
            base.append(_first_moved(g))

    strong_distr = [[g for g in strong if _fixes_all(g, base[:i])] for i in range(len(base))]
    transversals = [_orbit_transversal(degree, base[i], strong_distr[i]) for i in range(len(base))]
    inverses = [{pt: inverse(u) for pt, u in t.items()} for t in transversals]

    i = len(base) - 1
    while i >= 0:
        extended = False
        for beta, u_beta in list(transversals[i].items()):
            for s in strong_distr[i]:
                gamma = s.array_form[beta]
                schreier = compose(compose(u_beta, s), inverses[i][gamma])
                if schreier.is_identity():
                    continue
                residue, j = _sift(schreier, base, inverses, start=i + 1)
                if j == len(base) and residue.is_identity():
                    continue

                if j == len(base):
                    base.append(_first_moved(residue))
                    strong_distr.append([])
                    transversals.append({})
                    inverses.append({})
                for level in range(i + 1, j + 1):
                    strong_distr[level].append(residue)
                    transversals[level] = _orbit_transversal(
                        degree, base[level], strong_distr[level]
                    )
                    inverses[level] = {pt: inverse(u) for pt, u in transversals[level].items()}
                i = j
                extended = True
                break
            if extended:
                break
        if not extended:
            i -= 1

    return [
        ChainLevel(base[k], tuple(strong_distr[k]), transversals[k], inverses[k])
        for k in range(len(base))
    ]


class PermGroup:
    """
    A generator set plus its stabilizer chain.

    Immutable after construction and safe to share between threads.
    """

    def __init__(self, gens: GeneratorSet, base_prefix: Sequence[int] = ()):
        """
        Args:
            gens: Generators (may be empty for the trivial group)
            base_prefix: Optional 1-based points forced at the start of the base
        """
        self.gens = gens
        self.degree = gens.degree
        self._levels = tuple(_schreier_sims(gens.degree, gens.gens, [b - 1 for b in base_prefix]))
        self._base = tuple(level.base_point for level in self._levels)
        self._inverses = tuple(level.inverse_transversal for level in self._levels)
        self.order = math.prod(len(level.transversal) for level in self._levels)
        logger.debug(f"Built stabilizer chain: degree {self.degree}, base {self.base}, order {self.order}")

    @classmethod
    def from_perms(cls, degree: int, perms: Iterable[Permutation]) -> "PermGroup":
        return cls(GeneratorSet(degree, tuple(perms)))

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls(GeneratorSet(degree, ()))

    # ------------------------------------------------------------------
    # Chain data
    # ------------------------------------------------------------------

    @property
    def generators(self) -> tuple[Permutation, ...]:
        return self.gens.gens

    @property
    def base(self) -> tuple[int, ...]:
        """1-based base points."""
        return tuple(b + 1 for b in self._base)

    @property
    def levels(self) -> tuple[ChainLevel, ...]:
        return self._levels

    @property
    def strong_gens(self) -> tuple[Permutation, ...]:
        seen: dict[Permutation, None] = {}
        for level in self._levels:
            for g in level.strong_gens:
                seen.setdefault(g, None)
        return tuple(seen)

    @property
    def transversals(self) -> list[dict[int, Permutation]]:
        """Per base point, 1-based orbit point -> coset representative."""
        return [{pt + 1: u for pt, u in level.transversal.items()} for level in self._levels]

    @property
    def orbit_lengths(self) -> tuple[int, ...]:
        return tuple(len(level.transversal) for level in self._levels)

    def is_trivial(self) -> bool:
        return self.order == 1

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    # ------------------------------------------------------------------
    # Membership
    # ------------------------------------------------------------------

    def sift(self, p: Permutation) -> tuple[Permutation, int]:
        """Residue of p after stripping through the chain, and the level reached."""
        if p.degree != self.degree:
            raise DegreeMismatchError(f"degree {p.degree} does not match group degree {self.degree}")
        return _sift(p, self._base, self._inverses)

    def contains(self, p: Permutation) -> bool:
        residue, level = self.sift(p)
        return level == len(self._base) and residue.is_identity()

    def __contains__(self, p: object) -> bool:
        return isinstance(p, Permutation) and self.contains(p)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        if self.degree != other.degree:
            raise DegreeMismatchError(f"degree {self.degree} does not match degree {other.degree}")
        if self.order > other.order or other.order % self.order:
            return False
        return all(other.contains(g) for g in self.generators)

    # ------------------------------------------------------------------
    # Elements
    # ------------------------------------------------------------------

    def iter_elements(self) -> Iterator[Permutation]:
        """
        Elements in depth-first transversal product order (identity first).

        The element for representatives u_0 (outermost level) .. u_k is
        u_k * ... * u_1 * u_0.
        """
        levels = [list(level.transversal.values()) for level in self._levels]
        depth = len(levels)

        def walk(index: int, suffix: Permutation) -> Iterator[Permutation]:
            if index == depth:
                yield suffix
                return
            for u in levels[index]:
                yield from walk(index + 1, compose(u, suffix))

        yield from walk(0, self.identity())

    def elements(self, limit: int = DEFAULT_ELEMENT_LIMIT) -> list[Permutation]:
        if self.order > limit:
            raise OrderExceedsLimitError(self.order, limit)
        return list(self.iter_elements())

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order}, gens={len(self.gens)})"


# ============================================================================
# Functional API
# ============================================================================


def group_from_generators(gens: GeneratorSet) -> PermGroup:
    return PermGroup(gens)


def group_order(group: PermGroup) -> int:
    return group.order


def contains(group: PermGroup, p: Permutation) -> bool:
    return group.contains(p)


def subgroup_leq(a: PermGroup, b: PermGroup) -> bool:
    """True iff every generator of a sifts through b."""
    return a.is_subgroup_of(b)


def subgroup_eq(a: PermGroup, b: PermGroup) -> bool:
    return a.order == b.order and a.is_subgroup_of(b)


def enumerate_elements(group: PermGroup, limit: int = DEFAULT_ELEMENT_LIMIT) -> list[Permutation]:
    """
    All elements in deterministic order.

    Raises:
        OrderExceedsLimitError: If the group has more than limit elements
    """
    return group.elements(limit)


def subgroup_from_elements(degree: int, elements: Iterable[Permutation]) -> PermGroup:
    """Group generated by elements, keeping only those that enlarge the group so far."""
    group = PermGroup.trivial(degree)
    chosen: list[Permutation] = []
    for element in elements:
        if not group.contains(element):
            chosen.append(element)
            group = PermGroup(GeneratorSet(degree, tuple(chosen)))
    return group


def join(*groups: PermGroup, extra: Iterable[Permutation] = ()) -> PermGroup:
    """Subgroup generated by the generators of several groups plus extra elements."""
    if not groups:
        raise ValueError("join needs at least one group")
    degree = groups[0].degree
    perms: list[Permutation] = []
    for group in groups:
        if group.degree != degree:
            raise DegreeMismatchError(f"degree {group.degree} does not match degree {degree}")
        perms.extend(group.generators)
    perms.extend(extra)
    return PermGroup(GeneratorSet(degree, tuple(perms)))


def intersection(a: PermGroup, b: PermGroup, limit: int = DEFAULT_ELEMENT_LIMIT) -> PermGroup:
    """Brute-force intersection: enumerate the smaller group and filter by the larger."""
    if a.degree != b.degree:
        raise DegreeMismatchError(f"degree {a.degree} does not match degree {b.degree}")
    small, large = (a, b) if a.order <= b.order else (b, a)
    if small.is_subgroup_of(large):
        return small
    return subgroup_from_elements(
        a.degree, (g for g in small.elements(limit) if large.contains(g))
    )
