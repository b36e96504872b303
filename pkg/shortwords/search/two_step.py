"""
Two-step strategies: search inside an intermediate subgroup T first.

Step one finds short words t1..tn for T over the original generators; step two
searches over the t's. Results are given both nested (words in the t's) and
flattened (words in the original generators).
"""

import logging
from collections.abc import Sequence
from dataclasses import replace

from ..config import DEFAULT_ELEMENT_LIMIT
from ..errors import (
    ChainViolatedError,
    DegreeMismatchError,
    ElementNotContainedError,
    TargetNotCoveredError,
)
from ..perm.generators import GeneratorSet
from ..perm.group import PermGroup, subgroup_leq
from ..perm.permutation import Permutation
from ..structure.subgroups import centralizer, normalizer
from ..words.numerical import PoweredWord
from ..words.rendering import IDENTITY_WORD, format_powered_word
from .lookup import lookup_word
from .options import LookupOptions, SearchStatus, ShortGensOptions, TwoStepResult
from .short_gens import get_short_gens

logger = logging.getLogger(__name__)


def flatten_powered_word(nested: PoweredWord, defining: Sequence[PoweredWord]) -> PoweredWord:
    """
    Substitute each t_j by its defining powered word (w_j, e_j).

    A one-letter nested word t_j^e becomes (w_j, e_j * e), so the identity
    substitution returns the defining words unchanged. Longer words spell
    each t_j as w_j repeated e_j times and keep the outer exponent.
    """
    if len(nested.word) == 1:
        pw = defining[nested.word[0] - 1]
        if not pw.word:
            return PoweredWord((), 1)
        return PoweredWord(pw.word, pw.exponent * nested.exponent)

    word: list[int] = []
    for j in nested.word:
        pw = defining[j - 1]
        word.extend(pw.word * pw.exponent)
    if not word:
        return PoweredWord((), 1)
    return PoweredWord(tuple(word), nested.exponent)


def _t_names(count: int) -> tuple[str, ...]:
    return tuple(f"t{i}" for i in range(1, count + 1))


def _check_degree(gens: GeneratorSet, *groups: PermGroup):
    for group in groups:
        if group.degree != gens.degree:
            raise DegreeMismatchError(
                f"degree {group.degree} does not match generator degree {gens.degree}"
            )


def two_step_get_short_gens(
    gens: GeneratorSet,
    intermediate: PermGroup,
    target: PermGroup,
    opts: ShortGensOptions | None = None,
) -> TwoStepResult:
    """
    Short generators for target via S <= T <= <gens>.

    Raises:
        ChainViolatedError: If target is not inside intermediate
        TargetNotCoveredError: If intermediate is not inside <gens>
    """
    opts = opts or ShortGensOptions()
    _check_degree(gens, intermediate, target)
    if not subgroup_leq(target, intermediate):
        raise ChainViolatedError("S is not contained in T")
    group = PermGroup(gens)
    if not subgroup_leq(intermediate, group):
        raise TargetNotCoveredError()
    if target.order == intermediate.order or intermediate.order == group.order:
        logger.warning("Subgroup chain S < T < G is not strict")

    if target.is_trivial():
        return TwoStepResult(None, (), (), (), intermediate_order=intermediate.order)

    step_one = get_short_gens(gens, intermediate, replace(opts, exclude=None))
    logger.info(f"Step one found {len(step_one.powered_words)} generators for T")
    if not step_one.finished:
        return TwoStepResult(
            step_one, (), (), (), SearchStatus.UNFINISHED, intermediate.order
        )

    t_gens = GeneratorSet(gens.degree, step_one.elements, _t_names(len(step_one.elements)))
    if target.order == intermediate.order:
        nested = tuple(PoweredWord((i,), 1) for i in range(1, len(t_gens) + 1))
        status = SearchStatus.FINISHED
    else:
        step_two = get_short_gens(t_gens, target, opts)
        nested = step_two.powered_words
        status = step_two.status

    flattened = tuple(flatten_powered_word(pw, step_one.powered_words) for pw in nested)
    return TwoStepResult(
        step_one=step_one,
        nested_words=nested,
        flattened=flattened,
        rendered=tuple(format_powered_word(pw, gens.names) for pw in flattened),
        status=status,
        intermediate_order=intermediate.order,
        nested_rendered=tuple(format_powered_word(pw, t_gens.names) for pw in nested),
    )


def two_step_lookup_word(
    gens: GeneratorSet,
    intermediate: PermGroup,
    x: Permutation,
    opts: LookupOptions | None = None,
    short_opts: ShortGensOptions | None = None,
) -> TwoStepResult:
    """
    Word for x via an intermediate subgroup T containing x.

    Raises:
        ElementNotContainedError: If x is not in intermediate
        TargetNotCoveredError: If intermediate is not inside <gens>
    """
    opts = opts or LookupOptions()
    short_opts = short_opts or ShortGensOptions()
    _check_degree(gens, intermediate)
    if x.is_identity():
        empty = PoweredWord((), 1)
        return TwoStepResult(
            None, (empty,), (empty,), (IDENTITY_WORD,), intermediate_order=intermediate.order
        )
    if not intermediate.contains(x):
        raise ElementNotContainedError(f"{x} is not in the intermediate subgroup")
    group = PermGroup(gens)
    if not subgroup_leq(intermediate, group):
        raise TargetNotCoveredError()

    if intermediate.order == group.order:
        logger.info("Intermediate subgroup is the whole group; using a plain lookup")
        plain = lookup_word(gens, x, opts)
        return TwoStepResult(
            None,
            (plain.powered_word,),
            (plain.powered_word,),
            (plain.rendered,),
            intermediate_order=intermediate.order,
            nested_rendered=(plain.rendered,),
        )

    step_one = get_short_gens(gens, intermediate, replace(short_opts, exclude=None))
    if not step_one.finished:
        return TwoStepResult(step_one, (), (), (), SearchStatus.UNFINISHED, intermediate.order)

    t_gens = GeneratorSet(gens.degree, step_one.elements, _t_names(len(step_one.elements)))
    found = lookup_word(t_gens, x, opts)
    flattened = flatten_powered_word(found.powered_word, step_one.powered_words)
    return TwoStepResult(
        step_one=step_one,
        nested_words=(found.powered_word,),
        flattened=(flattened,),
        rendered=(format_powered_word(flattened, gens.names),),
        intermediate_order=intermediate.order,
        nested_rendered=(found.rendered,),
    )


def auto_intermediate_for_subgroup(
    gens: GeneratorSet, target: PermGroup, limit: int = DEFAULT_ELEMENT_LIMIT
) -> PermGroup:
    """N_G(S), the default T for two_step_get_short_gens."""
    return normalizer(PermGroup(gens), target, limit=limit)


def auto_intermediate_for_element(
    gens: GeneratorSet, x: Permutation, limit: int = DEFAULT_ELEMENT_LIMIT
) -> PermGroup:
    """C_G(x), the default T for two_step_lookup_word."""
    return centralizer(PermGroup(gens), x, limit=limit)
