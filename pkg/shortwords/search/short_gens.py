"""
Short-word generating sets for subgroups.
"""

import logging
from collections.abc import Iterator, Sequence

from ..errors import DegreeMismatchError, SingleGeneratorExhaustedError, TargetNotCoveredError
from ..perm.generators import GeneratorSet
from ..perm.group import PermGroup, intersection
from ..perm.permutation import Permutation, compose, perm_order, power
from ..words.numerical import NumericalWord, PoweredWord, iter_levels, word_to_elt
from ..words.rendering import format_powered_word
from .options import SearchStatus, ShortGensOptions, ShortGensResult
from .reduction import covers, reduce_gens_for_group

logger = logging.getLogger(__name__)


def _candidate_powers(
    y: Permutation, order_restriction: frozenset[int] | None
) -> Iterator[tuple[int, Permutation]]:
    """(m, y^m) in scan order."""
    r = perm_order(y)
    if order_restriction is None:
        z = y
        for m in range(1, r):
            yield m, z
            z = compose(z, y)
        return
    for o in sorted(order_restriction):
        if r % o == 0:
            m = r // o
            yield m, power(y, m)


def to_original(word: NumericalWord, kept: Sequence[int]) -> NumericalWord:
    """Rewrite a word over kept generators into original generator indices."""
    return tuple(kept[i - 1] for i in word)


def get_short_gens(
    gens: GeneratorSet, target: PermGroup, opts: ShortGensOptions | None = None
) -> ShortGensResult:
    """
    Find powered words of shortlex-small base words generating target.

    Words are visited in shortlex order; for each word w with element y the
    powers y^m are scanned and the first one in target but outside the
    current F is accepted, F := <F, y^m>. With an order restriction every
    power y^(|y|/o) for o in the restriction is tested in turn against the
    growing F. The search stops when F = target.

    Args:
        gens: Generators whose words are searched
        target: Subgroup to generate
        opts: Search options

    Returns:
        ShortGensResult whose powered words index gens directly. If the
        iteration limit runs out the status is UNFINISHED and the words found
        so far are returned.

    Raises:
        TargetNotCoveredError: If target is not inside <gens, exclude>
        FrontierExhaustedError: If the word frontier outgrows its cap
        SingleGeneratorExhaustedError: If one generator's powers are all spent
    """
    opts = opts or ShortGensOptions()
    exclude = opts.exclude
    for group in (target, exclude):
        if group is not None and group.degree != gens.degree:
            raise DegreeMismatchError(
                f"degree {group.degree} does not match generator degree {gens.degree}"
            )
    if not covers(gens, target, exclude):
        raise TargetNotCoveredError()

    degree = gens.degree
    if exclude is not None:
        seed = intersection(target, exclude, limit=opts.element_limit)
    else:
        seed = PermGroup.trivial(degree)
    f_gens: list[Permutation] = list(seed.generators)
    f_group = seed

    if opts.reduce_first:
        kept, work = reduce_gens_for_group(gens, target, exclude)
    else:
        kept, work = tuple(range(1, len(gens) + 1)), gens

    found_words: list[PoweredWord] = []
    found_elements: list[Permutation] = []
    levels = 0
    status = SearchStatus.FINISHED

    if f_group.order < target.order:
        if not kept:
            raise TargetNotCoveredError()
        g1_order = perm_order(work.gens[0])

        for level, window in iter_levels(len(work), opts.frontier_cap):
            if opts.iteration_limit is not None and level > opts.iteration_limit:
                status = SearchStatus.UNFINISHED
                break
            if len(work) == 1 and level > g1_order:
                raise SingleGeneratorExhaustedError()
            levels = level
            logger.info(f"{level}-th iteration")

            for word in window:
                y = word_to_elt(work, word)
                for m, z in _candidate_powers(y, opts.order_restriction):
                    if target.contains(z) and not f_group.contains(z):
                        f_gens.append(z)
                        f_group = PermGroup(GeneratorSet(degree, tuple(f_gens)))
                        found_words.append(PoweredWord(to_original(word, kept), m))
                        found_elements.append(z)
                        logger.info(
                            f"Got a new element: word {list(word)}^{m}, |F| = {f_group.order}"
                        )
                        # every restricted order is tested, an unrestricted scan stops here
                        if opts.order_restriction is None or f_group.order == target.order:
                            break
                if f_group.order == target.order:
                    break
            if f_group.order == target.order:
                break

    if status is SearchStatus.UNFINISHED:
        logger.warning(
            f"Couldn't generate group within {opts.iteration_limit} levels; "
            f"returning {len(found_words)} partial words"
        )
    elif opts.reduce_more and found_elements:
        found_set = GeneratorSet(degree, tuple(found_elements))
        keep, _ = reduce_gens_for_group(found_set, target, seed if not seed.is_trivial() else None)
        found_words = [found_words[i - 1] for i in keep]
        found_elements = [found_elements[i - 1] for i in keep]

    return ShortGensResult(
        powered_words=tuple(found_words),
        rendered=tuple(format_powered_word(pw, gens.names) for pw in found_words),
        kept_generator_indices=tuple(kept),
        status=status,
        levels_searched=levels,
        elements=tuple(found_elements),
    )
