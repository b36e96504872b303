"""
Named generator sets and the generator file format.

File format::

    # comment
    degree 8
    g1 = (1,2)
    g2 = (1,2,3,4,5,6,7,8)
"""

import logging
import re
from collections.abc import Sequence
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import CycleSyntaxError, DegreeMismatchError, GeneratorFileError
from .permutation import Permutation, parse_perm

logger = logging.getLogger(__name__)

_DEGREE_RE = re.compile(r"^\s*degree\s+(\d+)\s*$")
_ASSIGN_RE = re.compile(r"^\s*(?P<name>[A-Za-z_$][\w.$]*)\s*=\s*(?P<perm>.*?)\s*$")


def default_names(count: int) -> tuple[str, ...]:
    """Default generator labels "$.1", "$.2", ..."""
    return tuple(f"$.{i}" for i in range(1, count + 1))


@dataclass(frozen=True)
class GeneratorSet:
    """Ordered, named permutations of a common degree; defines word semantics."""

    degree: int
    gens: tuple[Permutation, ...] = ()
    names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(self.gens))
        if self.degree < 1:
            raise DegreeMismatchError(f"degree must be positive, got {self.degree}")
        for g in self.gens:
            if g.degree != self.degree:
                raise DegreeMismatchError(
                    f"generator {g} has degree {g.degree}, expected {self.degree}"
                )
        names = tuple(self.names) if self.names else default_names(len(self.gens))
        if len(names) != len(self.gens):
            logger.warning(
                "the number of generator names is incompatible with the number of "
                "generators, so re-building names"
            )
            names = default_names(len(self.gens))
        object.__setattr__(self, "names", names)

    def __len__(self) -> int:
        return len(self.gens)

    @property
    def arity(self) -> int:
        return len(self.gens)

    def subset(self, indices: Sequence[int]) -> "GeneratorSet":
        """Generators at the given 1-based indices, names preserved."""
        return GeneratorSet(
            self.degree,
            tuple(self.gens[i - 1] for i in indices),
            tuple(self.names[i - 1] for i in indices),
        )

    @classmethod
    def from_cycles(
        cls, degree: int, cycles: Sequence[str], names: Sequence[str] = ()
    ) -> "GeneratorSet":
        """Convenience constructor from cycle-notation strings."""
        return cls(degree, tuple(parse_perm(c, degree) for c in cycles), tuple(names))


def parse_generator_text(text: str, path: str = "<string>") -> GeneratorSet:
    """
    Parse the generator file format.

    Args:
        text: File contents
        path: Name used in error messages

    Returns:
        GeneratorSet in file order

    Raises:
        GeneratorFileError: With 1-based line and column of the first problem
    """
    degree: int | None = None
    gens: list[Permutation] = []
    names: list[str] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue

        if degree is None:
            match = _DEGREE_RE.match(line)
            if not match:
                column = len(line) - len(line.lstrip()) + 1
                raise GeneratorFileError("expected 'degree <n>'", path, lineno, column)
            degree = int(match.group(1))
            if degree < 1:
                raise GeneratorFileError("degree must be positive", path, lineno, 1)
            continue

        match = _ASSIGN_RE.match(line)
        if not match:
            column = len(line) - len(line.lstrip()) + 1
            raise GeneratorFileError("expected '<name> = <cycles>'", path, lineno, column)

        name = match.group("name")
        if name in names:
            raise GeneratorFileError(
                f"duplicate generator name {name!r}", path, lineno, match.start("name") + 1
            )

        perm_text = match.group("perm")
        offset = match.start("perm")
        try:
            gens.append(parse_perm(perm_text, degree))
        except CycleSyntaxError as e:
            column = offset + (e.column or 1)
            raise GeneratorFileError(str(e), path, lineno, column) from e
        names.append(name)

    if degree is None:
        raise GeneratorFileError("missing 'degree <n>' line", path, 1, 1)

    logger.debug(f"Parsed {len(gens)} generators of degree {degree} from {path}")
    return GeneratorSet(degree, tuple(gens), tuple(names))


def load_generator_file(path: Path) -> GeneratorSet:
    """
    Read and parse a generator file.

    Raises:
        GeneratorFileError: If the file is not UTF-8 or is malformed
        OSError: If the file cannot be read
    """
    data = Path(path).read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        line_start = data.rfind(b"\n", 0, e.start) + 1
        line = data.count(b"\n", 0, e.start) + 1
        column = len(data[line_start : e.start].decode("utf-8", errors="replace")) + 1
        raise GeneratorFileError("file is not valid UTF-8", str(path), line, column) from None
    return parse_generator_text(text, str(path))
