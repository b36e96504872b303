"""
Test helper functions and utilities.

Provides helper functions for:
- Writing generator files
- Brute-force group oracles (closure, membership, conjugation orbits)
- Random permutations and standard generator sets
"""

import random
from collections.abc import Iterable, Sequence
from pathlib import Path

from shortwords.perm import (
    GeneratorSet,
    PermGroup,
    Permutation,
    compose,
    inverse,
    parse_perm,
    perm_order,
)

# ============================================================================
# File Helpers
# ============================================================================


def write_gens_file(
    directory: Path, filename: str, degree: int, cycles: dict[str, str] | Sequence[str]
) -> Path:
    """
    Write a generator file.

    Args:
        directory: Directory to create the file in
        filename: File name
        degree: Permutation degree
        cycles: name -> cycle string, or bare cycle strings (named g1, g2, ...)

    Returns:
        Path: Path to created file
    """
    if not isinstance(cycles, dict):
        cycles = {f"g{i}": c for i, c in enumerate(cycles, start=1)}
    lines = [f"degree {degree}"] + [f"{name} = {c}" for name, c in cycles.items()]
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / filename
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


# ============================================================================
# Construction Helpers
# ============================================================================


def perm(text: str, degree: int) -> Permutation:
    return parse_perm(text, degree)


def gens_of(degree: int, *cycles: str, names: Sequence[str] = ()) -> GeneratorSet:
    return GeneratorSet.from_cycles(degree, cycles, names)


def group_of(degree: int, *cycles: str) -> PermGroup:
    return PermGroup(gens_of(degree, *cycles))


def symmetric_gens(n: int) -> GeneratorSet:
    """<(1,2), (1,...,n)>."""
    return gens_of(n, "(1,2)", "(" + ",".join(map(str, range(1, n + 1))) + ")")


def alternating_gens(n: int) -> GeneratorSet:
    """<(1,2,3), (1..n) or (2..n)> so both generators are even."""
    points = range(1, n + 1) if n % 2 else range(2, n + 1)
    return gens_of(n, "(1,2,3)", "(" + ",".join(map(str, points)) + ")")


def random_perm(degree: int, rng: random.Random) -> Permutation:
    images = list(range(1, degree + 1))
    rng.shuffle(images)
    return Permutation(images)


# ============================================================================
# Brute-Force Oracles
# ============================================================================


def closure(degree: int, gens: Iterable[Permutation]) -> set[Permutation]:
    """All products of gens, by breadth-first right multiplication."""
    gens = list(gens)
    identity = Permutation.identity(degree)
    elements = {identity}
    queue = [identity]
    for x in queue:
        for g in gens:
            y = compose(x, g)
            if y not in elements:
                elements.add(y)
                queue.append(y)
    return elements


def conjugation_orbit(elements: Iterable[Permutation], x: Permutation) -> set[Permutation]:
    """{g^-1 x g : g in elements}."""
    return {compose(compose(inverse(g), x), g) for g in elements}


def commute(a: Permutation, b: Permutation) -> bool:
    return compose(a, b) == compose(b, a)


def is_two_group(elements: Iterable[Permutation]) -> bool:
    return all(perm_order(e) & (perm_order(e) - 1) == 0 for e in elements)
