"""Test utility functions and helpers."""

from tests.utils.helpers import (
    alternating_gens,
    closure,
    commute,
    conjugation_orbit,
    gens_of,
    group_of,
    is_two_group,
    perm,
    random_perm,
    symmetric_gens,
    write_gens_file,
)

__all__ = [
    "write_gens_file",
    "perm",
    "gens_of",
    "group_of",
    "symmetric_gens",
    "alternating_gens",
    "random_perm",
    "closure",
    "conjugation_orbit",
    "commute",
    "is_two_group",
]
