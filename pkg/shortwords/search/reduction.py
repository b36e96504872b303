"""
Greedy generator-set reduction.

Both reductions try removing generators from the last one toward the first and
restart the scan after every successful removal, so the result is deterministic
for a given generator order.
"""

import logging
from collections.abc import Callable, Sequence

from ..errors import DegreeMismatchError, ElementNotContainedError, TargetNotCoveredError
from ..perm.generators import GeneratorSet
from ..perm.group import PermGroup
from ..perm.permutation import Permutation

logger = logging.getLogger(__name__)


def _greedy_reduce(count: int, still_ok: Callable[[tuple[int, ...]], bool]) -> tuple[int, ...]:
    kept = tuple(range(1, count + 1))
    removed = True
    while removed:
        removed = False
        for pos in range(len(kept) - 1, -1, -1):
            candidate = kept[:pos] + kept[pos + 1 :]
            if still_ok(candidate):
                logger.debug(f"Dropped generator {kept[pos]}")
                kept = candidate
                removed = True
                break
    return kept


def _generated(
    degree: int, gens: GeneratorSet, indices: Sequence[int], extra: Sequence[Permutation] = ()
) -> PermGroup:
    perms = tuple(gens.gens[i - 1] for i in indices) + tuple(extra)
    return PermGroup(GeneratorSet(degree, perms))


def covers(
    gens: GeneratorSet, target: PermGroup, exclude: PermGroup | None = None
) -> bool:
    """True iff target <= <gens, exclude>."""
    extra = exclude.generators if exclude is not None else ()
    span = _generated(gens.degree, gens, range(1, len(gens) + 1), extra)
    return all(span.contains(t) for t in target.generators)


def reduce_gens_for_group(
    gens: GeneratorSet, target: PermGroup, exclude: PermGroup | None = None
) -> tuple[tuple[int, ...], GeneratorSet]:
    """
    Drop generators while target stays inside <kept, exclude>.

    Returns:
        (kept 1-based indices, the kept GeneratorSet)

    Raises:
        DegreeMismatchError: If the degrees differ
        TargetNotCoveredError: If target is not inside <gens, exclude>
    """
    for group in (target, exclude):
        if group is not None and group.degree != gens.degree:
            raise DegreeMismatchError(
                f"degree {group.degree} does not match generator degree {gens.degree}"
            )
    if not covers(gens, target, exclude):
        raise TargetNotCoveredError()

    logger.info("Reducing generators")
    extra = exclude.generators if exclude is not None else ()

    def still_ok(candidate: tuple[int, ...]) -> bool:
        span = _generated(gens.degree, gens, candidate, extra)
        return all(span.contains(t) for t in target.generators)

    kept = _greedy_reduce(len(gens), still_ok)
    logger.info(f"Kept generators {list(kept)} of {len(gens)}")
    return kept, gens.subset(kept)


def reduce_gens_for_elt(
    gens: GeneratorSet, x: Permutation
) -> tuple[tuple[int, ...], GeneratorSet]:
    """
    Drop generators while x stays inside the generated group.

    Raises:
        ElementNotContainedError: If x is not in <gens>
    """
    if x.degree != gens.degree:
        raise DegreeMismatchError(f"degree {x.degree} does not match generator degree {gens.degree}")
    if not PermGroup(gens).contains(x):
        raise ElementNotContainedError(f"{x} is not in the generated group")

    logger.info("Reducing generators")
    kept = _greedy_reduce(
        len(gens), lambda candidate: _generated(gens.degree, gens, candidate).contains(x)
    )
    logger.info(f"Kept generators {list(kept)} of {len(gens)}")
    return kept, gens.subset(kept)
