"""
Word-tree calculus: numerical words, frontier expansion, evaluation and rendering.
"""

from .numerical import (
    NumericalWord,
    Ordering,
    PoweredWord,
    WordFrontier,
    enum_words,
    iter_levels,
    lex_compare,
    shortlex_key,
    word_to_elt,
)
from .rendering import IDENTITY_WORD, format_powered_word, format_word, parse_word

__all__ = [
    "IDENTITY_WORD",
    "NumericalWord",
    "Ordering",
    "PoweredWord",
    "WordFrontier",
    "enum_words",
    "iter_levels",
    "format_powered_word",
    "format_word",
    "lex_compare",
    "parse_word",
    "shortlex_key",
    "word_to_elt",
]
