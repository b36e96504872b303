"""
Text rendering of numerical words with run-length power notation.

    [1, 4, 4, 4, 2, 3, 3]        -> "$.1*$.4^3*$.2*$.3^2"
    [2, 1, 2, 2, 2, 2], exp 5    -> "(g2*g1*g2^4)^5"
    [], exp 1                    -> "Id($)"
"""

import re
from collections.abc import Sequence
from itertools import groupby

from ..errors import IndexOutOfRangeError, InputError
from .numerical import NumericalWord, PoweredWord

IDENTITY_WORD = "Id($)"

_OUTER_POWER_RE = re.compile(r"^\((?P<body>.+)\)\^(?P<exponent>\d+)$")
_TERM_RE = re.compile(r"^(?P<name>[^*^()]+?)(?:\^(?P<count>\d+))?$")


def format_word(word: NumericalWord, names: Sequence[str], exponent: int = 1) -> str:
    """
    Render word, compressing runs of equal indices to name^count.

    An outer exponent above 1 wraps the word as "(...)^e", except that a word
    of a single letter renders as "name^e".

    Raises:
        IndexOutOfRangeError: If an index has no name
    """
    if exponent < 1:
        raise ValueError(f"exponent must be positive, got {exponent}")
    for i in word:
        if not 1 <= i <= len(names):
            raise IndexOutOfRangeError(f"generator index {i} is outside 1..{len(names)}")
    if not word:
        return IDENTITY_WORD

    terms = []
    for index, run in groupby(word):
        count = len(list(run))
        name = names[index - 1]
        terms.append(name if count == 1 else f"{name}^{count}")
    body = "*".join(terms)

    if exponent == 1:
        return body
    if len(word) == 1:
        return f"{body}^{exponent}"
    return f"({body})^{exponent}"


def format_powered_word(pw: PoweredWord, names: Sequence[str]) -> str:
    return format_word(pw.word, names, pw.exponent)


def parse_word(text: str, names: Sequence[str]) -> PoweredWord:
    """
    Read back the output of format_word.

    A trailing power on a bare single letter ("g2^5") is a run, not an outer
    exponent, so it parses to ([2, 2, 2, 2, 2], 1); both evaluate the same.

    Raises:
        InputError: If text is not a rendered word over names
    """
    text = text.strip()
    if text == IDENTITY_WORD:
        return PoweredWord((), 1)

    exponent = 1
    match = _OUTER_POWER_RE.match(text)
    if match:
        text = match.group("body")
        exponent = int(match.group("exponent"))

    index_of = {name: i for i, name in enumerate(names, start=1)}
    word: list[int] = []
    for term in text.split("*"):
        term_match = _TERM_RE.match(term)
        if not term_match or term_match.group("name") not in index_of:
            raise InputError(f"'{term}' is not a generator power over {list(names)}")
        count = int(term_match.group("count") or 1)
        if count < 1:
            raise InputError(f"run length in '{term}' must be positive")
        word.extend([index_of[term_match.group("name")]] * count)

    if exponent < 1:
        raise InputError(f"outer exponent must be positive, got {exponent}")
    return PoweredWord(tuple(word), exponent)
