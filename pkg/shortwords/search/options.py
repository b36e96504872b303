"""
Options and result types for the short-word searches.
"""

from dataclasses import dataclass, field
from enum import Enum

from ..config import DEFAULT_ELEMENT_LIMIT, DEFAULT_FRONTIER_CAP
from ..perm.group import PermGroup
from ..perm.permutation import Permutation
from ..words.numerical import PoweredWord


class SearchStatus(str, Enum):
    FINISHED = "finished"
    UNFINISHED = "unfinished"


@dataclass(frozen=True)
class ShortGensOptions:
    """
    Knobs for get_short_gens.

    Attributes:
        exclude: Seeds F with target & exclude and widens the coverage check
        reduce_first: Shrink the generator set before searching
        reduce_more: Shrink the returned list after searching
        order_restriction: Only test y^(|y|/o) for these orders o
        iteration_limit: Give up (UNFINISHED) after this many word-tree levels
        frontier_cap: Maximum stored word indices
        element_limit: Bound for the brute-force target & exclude
    """

    exclude: PermGroup | None = None
    reduce_first: bool = True
    reduce_more: bool = True
    order_restriction: frozenset[int] | None = None
    iteration_limit: int | None = None
    frontier_cap: int = DEFAULT_FRONTIER_CAP
    element_limit: int = DEFAULT_ELEMENT_LIMIT

    def __post_init__(self):
        if self.order_restriction is not None:
            restriction = frozenset(self.order_restriction)
            if any(o < 1 for o in restriction):
                raise ValueError(f"orders must be positive: {sorted(restriction)}")
            object.__setattr__(self, "order_restriction", restriction)
        if self.iteration_limit is not None and self.iteration_limit < 1:
            raise ValueError(f"iteration_limit must be positive, got {self.iteration_limit}")


@dataclass(frozen=True)
class LookupOptions:
    """Knobs for lookup_word. reduce_first is ignored under conjugate_check."""

    conjugate_check: bool = False
    reduce_first: bool = True
    iteration_limit: int | None = None
    frontier_cap: int = DEFAULT_FRONTIER_CAP
    element_limit: int = DEFAULT_ELEMENT_LIMIT

    def __post_init__(self):
        if self.iteration_limit is not None and self.iteration_limit < 1:
            raise ValueError(f"iteration_limit must be positive, got {self.iteration_limit}")

    @property
    def effective_reduce_first(self) -> bool:
        return self.reduce_first and not self.conjugate_check


@dataclass(frozen=True)
class ShortGensResult:
    """
    Powered words over the original generators, in acceptance order.

    elements holds the evaluation of each powered word.
    """

    powered_words: tuple[PoweredWord, ...]
    rendered: tuple[str, ...]
    kept_generator_indices: tuple[int, ...]
    status: SearchStatus = SearchStatus.FINISHED
    levels_searched: int = 0
    elements: tuple[Permutation, ...] = ()

    @property
    def finished(self) -> bool:
        return self.status is SearchStatus.FINISHED

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "words": list(self.rendered),
            "powered_words": [pw.to_dict() for pw in self.powered_words],
            "kept_generator_indices": list(self.kept_generator_indices),
            "levels_searched": self.levels_searched,
        }


@dataclass(frozen=True)
class LookupResult:
    powered_word: PoweredWord
    rendered: str
    kept_generator_indices: tuple[int, ...] = ()
    levels_searched: int = 0

    def to_dict(self) -> dict:
        return {
            "word": self.rendered,
            "powered_word": self.powered_word.to_dict(),
            "kept_generator_indices": list(self.kept_generator_indices),
            "levels_searched": self.levels_searched,
        }


@dataclass(frozen=True)
class TwoStepResult:
    """
    Outcome of a two-step strategy.

    nested_words are words in t1..tn (the step-one elements); flattened are the
    same elements as words in the original generators.
    """

    step_one: ShortGensResult | None
    nested_words: tuple[PoweredWord, ...]
    flattened: tuple[PoweredWord, ...]
    rendered: tuple[str, ...]
    status: SearchStatus = SearchStatus.FINISHED
    intermediate_order: int = 1
    nested_rendered: tuple[str, ...] = field(default=())

    @property
    def finished(self) -> bool:
        return self.status is SearchStatus.FINISHED

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "intermediate_order": self.intermediate_order,
            "step_one": list(self.step_one.rendered) if self.step_one else [],
            "nested": list(self.nested_rendered),
            "words": list(self.rendered),
        }
