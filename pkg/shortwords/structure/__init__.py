"""
Brute-force structure queries: classes, centralizers, Sylow 2-subgroups and
elementary abelian normal subgroups.

Word representatives for class tables live in shortwords.structure.tables,
which depends on the search package and is not imported here.
"""

from .classes import (
    ClassTable,
    ConjugacyClass,
    ConjugacyResult,
    are_conjugate,
    conjugacy_class_of,
    conjugacy_classes,
    conjugate,
    power_map,
)
from .elementary import (
    is_elementary_abelian,
    is_maximal_el_ab_normal,
    is_normal,
    maximal_elementary_abelian_normals,
    normal_closure,
)
from .michler import Step4Report, michler_step4
from .subgroups import center, centralizer, normalizer, sylow2, two_central_involutions, two_part

__all__ = [
    "ClassTable",
    "ConjugacyClass",
    "ConjugacyResult",
    "Step4Report",
    "are_conjugate",
    "center",
    "centralizer",
    "conjugacy_class_of",
    "conjugacy_classes",
    "conjugate",
    "is_elementary_abelian",
    "is_maximal_el_ab_normal",
    "is_normal",
    "maximal_elementary_abelian_normals",
    "michler_step4",
    "normal_closure",
    "normalizer",
    "power_map",
    "sylow2",
    "two_central_involutions",
    "two_part",
]
