"""
Numerical words, the word-tree frontier and word evaluation.

A numerical word of k generators is a tuple of indices in 1..k; the empty
tuple is the identity word. The word tree is never built as a tree: only the
flat, level-ordered word list with a window over its deepest level exists.
"""

from collections.abc import Iterator
from dataclasses import dataclass
from enum import IntEnum

from ..errors import ArityMismatchError, FrontierExhaustedError, IndexOutOfRangeError
from ..perm.generators import GeneratorSet
from ..perm.permutation import Permutation, compose, power

NumericalWord = tuple[int, ...]


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class PoweredWord:
    """A word together with an outer exponent; evaluates to word_to_elt(word) ** exponent."""

    word: NumericalWord
    exponent: int = 1

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        if self.exponent < 1:
            raise ValueError(f"exponent must be positive, got {self.exponent}")

    def __len__(self) -> int:
        return len(self.word)

    def evaluate(self, gens: GeneratorSet) -> Permutation:
        return power(word_to_elt(gens, self.word), self.exponent)

    def to_dict(self) -> dict:
        return {"word": list(self.word), "exponent": self.exponent}


@dataclass(frozen=True)
class WordFrontier:
    """
    The breadth-first slice of the word tree.

    window_start/window_end are 1-based and inclusive; they mark the most
    recently generated level. An empty frontier has window (0, 0).
    """

    all_words: tuple[NumericalWord, ...] = ()
    window_start: int = 0
    window_end: int = 0
    stored_indices: int = 0

    @classmethod
    def from_words(
        cls, words: list[NumericalWord] | tuple[NumericalWord, ...], window_start: int, window_end: int
    ) -> "WordFrontier":
        words = tuple(tuple(w) for w in words)
        if words and not 1 <= window_start <= window_end <= len(words):
            raise ValueError(f"window [{window_start}, {window_end}] is invalid for {len(words)} words")
        return cls(words, window_start, window_end, sum(len(w) for w in words))

    def is_empty(self) -> bool:
        return not self.all_words

    @property
    def window(self) -> tuple[NumericalWord, ...]:
        """Words of the deepest level, in order."""
        if self.is_empty():
            return ()
        return self.all_words[self.window_start - 1 : self.window_end]

    @property
    def level_length(self) -> int:
        return len(self.all_words[self.window_start - 1]) if self.all_words else 0


def enum_words(
    frontier: WordFrontier, k: int, max_stored_indices: int | None = None
) -> WordFrontier:
    """
    Descend one level in the word tree.

    An empty frontier yields [1], ..., [k]. Otherwise every window word, in
    window order, gets the children word + [j] for j = 1..k appended after
    the existing words, and the new window covers exactly the appended block.

    Raises:
        ArityMismatchError: If k < 1 or a window word uses an index above k
        FrontierExhaustedError: If the stored indices would exceed max_stored_indices
    """
    if k < 1:
        raise ArityMismatchError(f"arity must be at least 1, got {k}")

    if frontier.is_empty():
        words = tuple((i,) for i in range(1, k + 1))
        return WordFrontier(words, 1, k, k)

    window = frontier.window
    for word in window:
        if any(not 1 <= i <= k for i in word):
            raise ArityMismatchError(f"word {list(word)} is not a word in {k} generators")

    added_indices = len(window) * k * (frontier.level_length + 1)
    total = frontier.stored_indices + added_indices
    if max_stored_indices is not None and total > max_stored_indices:
        raise FrontierExhaustedError(
            f"word frontier would hold {total} indices, cap is {max_stored_indices}"
        )

    children = tuple(word + (j,) for word in window for j in range(1, k + 1))
    start = len(frontier.all_words) + 1
    return WordFrontier(
        frontier.all_words + children, start, start + len(children) - 1, total
    )


def iter_levels(
    k: int, max_stored_indices: int | None = None
) -> Iterator[tuple[int, tuple[NumericalWord, ...]]]:
    """Yield (level, words of that level) forever, starting at level 1."""
    frontier = WordFrontier()
    level = 0
    while True:
        frontier = enum_words(frontier, k, max_stored_indices)
        level += 1
        yield level, frontier.window


def word_to_elt(gens: GeneratorSet, word: NumericalWord) -> Permutation:
    """
    Left-to-right product of the indexed generators; the empty word is the identity.

    Raises:
        IndexOutOfRangeError: If an index lies outside 1..len(gens)
    """
    element = Permutation.identity(gens.degree)
    for i in word:
        if not 1 <= i <= len(gens.gens):
            raise IndexOutOfRangeError(f"generator index {i} is outside 1..{len(gens.gens)}")
        element = compose(element, gens.gens[i - 1])
    return element


def lex_compare(u: NumericalWord, w: NumericalWord) -> Ordering:
    """Shortlex: shorter words first, then the first differing index decides."""
    if len(u) != len(w):
        return Ordering.LESS if len(u) < len(w) else Ordering.GREATER
    for a, b in zip(u, w, strict=True):
        if a != b:
            return Ordering.LESS if a < b else Ordering.GREATER
    return Ordering.EQUAL


def shortlex_key(word: NumericalWord) -> tuple[int, NumericalWord]:
    """Sort key agreeing with lex_compare."""
    return len(word), tuple(word)
