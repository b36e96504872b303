"""
Short-word expressions for single elements, exactly or up to conjugacy.
"""

import logging
import math

from ..errors import DegreeMismatchError, ElementNotContainedError, FrontierExhaustedError
from ..perm.generators import GeneratorSet
from ..perm.group import PermGroup
from ..perm.permutation import Permutation, cycle_type, perm_order, power
from ..structure.classes import conjugacy_class_of
from ..words.numerical import PoweredWord, iter_levels, word_to_elt
from ..words.rendering import IDENTITY_WORD, format_powered_word
from .options import LookupOptions, LookupResult
from .reduction import reduce_gens_for_elt
from .short_gens import to_original

logger = logging.getLogger(__name__)


def lookup_word(
    gens: GeneratorSet, x: Permutation, opts: LookupOptions | None = None
) -> LookupResult:
    """
    Find a powered word w^e with w shortlex-small and w^e = x.

    For each word w (element y, r = |y|, s = |x|) with s dividing r, the
    exponents (r/s)*a are tried for a coprime to s in ascending order.
    Under conjugate_check a power conjugate to x in <gens> is accepted.

    Raises:
        ElementNotContainedError: If x is not in <gens>
        FrontierExhaustedError: If the iteration limit or frontier cap is hit
    """
    opts = opts or LookupOptions()
    if x.degree != gens.degree:
        raise DegreeMismatchError(f"degree {x.degree} does not match generator degree {gens.degree}")

    if x.is_identity():
        logger.info("it is the identity!")
        return LookupResult(PoweredWord((), 1), IDENTITY_WORD)

    group = PermGroup(gens)
    if not group.contains(x):
        raise ElementNotContainedError(f"{x} is not in the generated group")

    if opts.effective_reduce_first:
        kept, work = reduce_gens_for_elt(gens, x)
    else:
        kept, work = tuple(range(1, len(gens) + 1)), gens

    matches: frozenset[Permutation] | None = None
    if opts.conjugate_check:
        matches = conjugacy_class_of(group, x, limit=opts.element_limit)
    x_shape = cycle_type(x)

    s = perm_order(x)
    multipliers = [a for a in range(1, s + 1) if math.gcd(a, s) == 1]

    for level, window in iter_levels(len(work), opts.frontier_cap):
        if opts.iteration_limit is not None and level > opts.iteration_limit:
            raise FrontierExhaustedError(
                f"Couldn't find a word within {opts.iteration_limit} levels"
            )
        logger.info(f"{level}-th iteration")

        for word in window:
            y = word_to_elt(work, word)
            r = perm_order(y)
            if r % s:
                continue
            for a in multipliers:
                exponent = (r // s) * a
                z = power(y, exponent)
                if matches is None:
                    hit = z == x
                else:
                    hit = cycle_type(z) == x_shape and z in matches
                if hit:
                    pw = PoweredWord(to_original(word, kept), exponent)
                    logger.info(f"Found word {list(pw.word)} with exponent {exponent}")
                    return LookupResult(
                        powered_word=pw,
                        rendered=format_powered_word(pw, gens.names),
                        kept_generator_indices=tuple(kept),
                        levels_searched=level,
                    )

    raise AssertionError("unreachable")  # pragma: no cover
