"""
Desk-scale driver for the class/centralizer/Sylow checks of the amalgam method.

Given an extension group E with an elementary abelian normal subgroup V, pick a
2-central involution z of E, compute D = C_E(z) and a Sylow 2-subgroup S of D,
and test whether V is a maximal elementary abelian normal subgroup of S. If it
is not, the construction stops here.
"""

import logging
from dataclasses import dataclass

from ..config import DEFAULT_ELEMENT_LIMIT
from ..errors import CheckerPreconditionError
from ..perm.group import PermGroup, subgroup_leq
from ..perm.permutation import Permutation
from .classes import ClassTable, conjugacy_classes
from .elementary import is_elementary_abelian, is_maximal_el_ab_normal, is_normal
from .subgroups import centralizer, sylow2, two_central_involutions

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Step4Report:
    involution: Permutation
    involution_class: str
    centralizer: PermGroup
    sylow: PermGroup
    v_is_maximal: bool
    class_table: ClassTable

    @property
    def terminates(self) -> bool:
        """True when V fails the maximality test."""
        return not self.v_is_maximal

    def to_dict(self) -> dict:
        return {
            "involution": str(self.involution),
            "involution_class": self.involution_class,
            "centralizer_order": self.centralizer.order,
            "sylow_order": self.sylow.order,
            "v_is_maximal": self.v_is_maximal,
        }


def michler_step4(
    extension: PermGroup, v: PermGroup, limit: int = DEFAULT_ELEMENT_LIMIT
) -> Step4Report:
    """
    Run the maximality check for V inside a Sylow 2-subgroup of C_E(z).

    z is the representative of the first 2-central involution class of E.

    Raises:
        CheckerPreconditionError: If V is not elementary abelian and normal in E,
            or E has no involutions
    """
    if not subgroup_leq(v, extension):
        raise CheckerPreconditionError("V is not a subgroup of E")
    if not is_elementary_abelian(v) or not is_normal(extension, v):
        raise CheckerPreconditionError("V is not an elementary abelian normal subgroup of E")

    table = conjugacy_classes(extension, limit)
    involutions = two_central_involutions(extension, limit, table=table)
    if not involutions:
        raise CheckerPreconditionError("E has no 2-central involution")

    z_class = involutions[0]
    d = centralizer(extension, z_class.representative, limit)
    s = sylow2(d, limit)
    logger.info(f"z in class {z_class.name}: |D| = {d.order}, |S| = {s.order}")

    maximal = is_maximal_el_ab_normal(s, v, limit)
    if not maximal:
        logger.warning("V is not maximal elementary abelian normal in S; the construction stops")

    return Step4Report(
        involution=z_class.representative,
        involution_class=z_class.name,
        centralizer=d,
        sylow=s,
        v_is_maximal=maximal,
        class_table=table,
    )
