"""
Short-word searches: generator reduction, GetShortGens, LookupWord and two-step strategies.
"""

from .lookup import lookup_word
from .options import (
    LookupOptions,
    LookupResult,
    SearchStatus,
    ShortGensOptions,
    ShortGensResult,
    TwoStepResult,
)
from .reduction import covers, reduce_gens_for_elt, reduce_gens_for_group
from .short_gens import get_short_gens
from .two_step import (
    auto_intermediate_for_element,
    auto_intermediate_for_subgroup,
    flatten_powered_word,
    two_step_get_short_gens,
    two_step_lookup_word,
)

__all__ = [
    "LookupOptions",
    "LookupResult",
    "SearchStatus",
    "ShortGensOptions",
    "ShortGensResult",
    "TwoStepResult",
    "auto_intermediate_for_element",
    "auto_intermediate_for_subgroup",
    "covers",
    "flatten_powered_word",
    "get_short_gens",
    "lookup_word",
    "reduce_gens_for_elt",
    "reduce_gens_for_group",
    "two_step_get_short_gens",
    "two_step_lookup_word",
]
