"""
Permutation arithmetic and cycle-notation I/O.

Points are 1-based at every interface. Composition is left to right:
``compose(p, q)`` (also ``p * q``) applies p first, then q.
"""

import math
import re
from collections.abc import Iterable, Sequence

from ..errors import (
    CycleSyntaxError,
    DegreeMismatchError,
    PointOutOfRangeError,
    RepeatedPointError,
)

_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+)|(?P<sym>[(),])|(?P<bad>\S))")


class Permutation:
    """A bijection on {1..degree}, stored as a 0-based image table."""

    __slots__ = ("_img", "_hash")

    def __init__(self, images: Iterable[int]):
        """
        Build a permutation from its 1-based image list.

        Args:
            images: images[i - 1] is the image of point i

        Raises:
            PointOutOfRangeError: If an image lies outside 1..degree
            RepeatedPointError: If an image occurs twice
        """
        img = tuple(int(i) - 1 for i in images)
        degree = len(img)
        seen = [False] * degree
        for point, target in enumerate(img, start=1):
            if not 0 <= target < degree:
                raise PointOutOfRangeError(
                    f"image {target + 1} of point {point} is outside 1..{degree}"
                )
            if seen[target]:
                raise RepeatedPointError(f"point {target + 1} occurs twice as an image")
            seen[target] = True
        self._img = img
        self._hash = hash(img)

    @classmethod
    def from_array(cls, array: Sequence[int]) -> "Permutation":
        """Wrap a trusted 0-based image table without validation."""
        perm = cls.__new__(cls)
        perm._img = tuple(array)
        perm._hash = hash(perm._img)
        return perm

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls.from_array(range(degree))

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def array_form(self) -> tuple[int, ...]:
        """0-based image table."""
        return self._img

    @property
    def images(self) -> tuple[int, ...]:
        """1-based image table: images[i - 1] is the image of point i."""
        return tuple(i + 1 for i in self._img)

    def image(self, point: int) -> int:
        """Image of a 1-based point."""
        return self._img[point - 1] + 1

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self._img))

    def moved_points(self) -> list[int]:
        """1-based points not fixed, ascending."""
        return [i + 1 for i, j in enumerate(self._img) if i != j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._img == other._img

    def __hash__(self) -> int:
        return self._hash

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, n: int) -> "Permutation":
        return power(self, n)

    def __invert__(self) -> "Permutation":
        return inverse(self)

    def __repr__(self) -> str:
        return f"Permutation({format_perm(self)!r}, degree={self.degree})"

    def __str__(self) -> str:
        return format_perm(self)


def _check_degrees(p: Permutation, q: Permutation):
    if p.degree != q.degree:
        raise DegreeMismatchError(f"degree {p.degree} does not match degree {q.degree}")


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply p first, then q: the result maps i to q(p(i))."""
    _check_degrees(p, q)
    qi = q._img
    return Permutation.from_array([qi[i] for i in p._img])


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, j in enumerate(p._img):
        inv[j] = i
    return Permutation.from_array(inv)


def power(p: Permutation, n: int) -> Permutation:
    """p raised to an integer power (negative powers invert)."""
    if n < 0:
        return power(inverse(p), -n)
    # Reduce by the order so huge exponents stay cheap
    n %= perm_order(p)
    result = Permutation.identity(p.degree)
    base = p
    while n:
        if n & 1:
            result = compose(result, base)
        base = compose(base, base)
        n >>= 1
    return result


def cycles(p: Permutation) -> list[tuple[int, ...]]:
    """Non-trivial cycles as 1-based tuples, each starting at its least point."""
    seen = [False] * p.degree
    out = []
    for start in range(p.degree):
        if seen[start] or p._img[start] == start:
            continue
        cycle = []
        j = start
        while not seen[j]:
            seen[j] = True
            cycle.append(j + 1)
            j = p._img[j]
        out.append(tuple(cycle))
    return out


def cycle_type(p: Permutation) -> tuple[int, ...]:
    """Sorted lengths of the non-trivial cycles."""
    return tuple(sorted(len(c) for c in cycles(p)))


def perm_order(p: Permutation) -> int:
    """Order of p: the lcm of its cycle lengths (1 for the identity)."""
    return math.lcm(1, *(len(c) for c in cycles(p)))


def format_perm(p: Permutation) -> str:
    """Cycle notation without spaces, '()' for the identity."""
    out = "".join("(" + ",".join(map(str, c)) + ")" for c in cycles(p))
    return out or "()"


def parse_perm(text: str, degree: int) -> Permutation:
    """
    Parse disjoint cycles such as "(1,2,3)(4,5)" into a permutation of given degree.

    "()" and "id" denote the identity; whitespace is tolerated anywhere.

    Raises:
        CycleSyntaxError: On malformed input (column is 1-based)
        RepeatedPointError: If a point occurs twice
        PointOutOfRangeError: If a point exceeds degree
    """
    if degree < 1:
        raise CycleSyntaxError(f"degree must be positive, got {degree}")

    stripped = text.strip()
    if stripped in ("()", "id"):
        return Permutation.identity(degree)
    if not stripped:
        raise CycleSyntaxError("empty permutation text", column=1)

    img = list(range(degree))
    used: set[int] = set()
    cycle: list[int] | None = None
    expect_point = False
    pos = 0

    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            # Only trailing whitespace remains
            break
        column = match.start(match.lastgroup) + 1 if match.lastgroup else pos + 1
        pos = match.end()

        if match.group("bad") is not None:
            raise CycleSyntaxError(f"unexpected character {match.group('bad')!r}", column)

        sym = match.group("sym")
        num = match.group("num")

        if sym == "(":
            if cycle is not None:
                raise CycleSyntaxError("nested '('", column)
            cycle = []
            expect_point = True
        elif sym == ")":
            if cycle is None:
                raise CycleSyntaxError("unmatched ')'", column)
            if expect_point and cycle:
                raise CycleSyntaxError("missing point before ')'", column)
            for a, b in zip(cycle, cycle[1:] + cycle[:1], strict=True):
                img[a - 1] = b - 1
            cycle = None
            expect_point = False
        elif sym == ",":
            if cycle is None or expect_point:
                raise CycleSyntaxError("unexpected ','", column)
            expect_point = True
        else:
            if cycle is None:
                raise CycleSyntaxError("point outside parentheses", column)
            if not expect_point:
                raise CycleSyntaxError("missing ',' between points", column)
            point = int(num)
            if point < 1 or point > degree:
                raise PointOutOfRangeError(f"point {point} is outside 1..{degree}", column)
            if point in used:
                raise RepeatedPointError(f"point {point} occurs twice", column)
            used.add(point)
            cycle.append(point)
            expect_point = False

    if cycle is not None:
        raise CycleSyntaxError("unterminated cycle", len(text) + 1)

    return Permutation.from_array(img)
