"""
Permutation action of a group on the right cosets of a subgroup.
"""

import logging
from dataclasses import dataclass

from ..config import DEFAULT_COSET_INDEX_LIMIT
from ..errors import IndexExceedsLimitError, NotASubgroupError
from .generators import GeneratorSet
from .group import PermGroup, subgroup_leq
from .permutation import Permutation, compose

logger = logging.getLogger(__name__)


def _canonical_representative(chain: PermGroup, x: Permutation) -> Permutation:
    """
    Lexicographically least element of the coset U*x.

    chain must be U with base 1..n so each level fixes all smaller points; at every
    level the orbit point whose image under the current representative is least is
    moved to the front.
    """
    for level in chain.levels:
        img = x.array_form
        beta = min(level.transversal, key=lambda pt: img[pt])
        x = compose(level.transversal[beta], x)
    return x


@dataclass(frozen=True)
class CosetActionResult:
    """Image of G acting on the right cosets Ux (point 1 is U itself)."""

    image: PermGroup
    point_to_coset: dict[int, Permutation]
    kernel_order: int
    _subgroup_chain: PermGroup
    _coset_to_point: dict[Permutation, int]

    @property
    def degree(self) -> int:
        return self.image.degree

    @property
    def is_faithful(self) -> bool:
        return self.kernel_order == 1

    def act(self, g: Permutation) -> Permutation:
        """Image of an element of G under the action homomorphism."""
        images = []
        for point in range(1, self.degree + 1):
            target = _canonical_representative(
                self._subgroup_chain, compose(self.point_to_coset[point], g)
            )
            images.append(self._coset_to_point[target])
        return Permutation(images)


def coset_action(
    group: PermGroup, subgroup: PermGroup, index_limit: int = DEFAULT_COSET_INDEX_LIMIT
) -> CosetActionResult:
    """
    Action of group on the right cosets of subgroup.

    Cosets are numbered in breadth-first order from U*id, expanding by the
    generators of group in order; coset Ux is sent to Uxg by g.

    Raises:
        NotASubgroupError: If subgroup is not contained in group
        IndexExceedsLimitError: If [G:U] exceeds index_limit
    """
    if not subgroup_leq(subgroup, group):
        raise NotASubgroupError("subgroup is not contained in the group")

    index = group.order // subgroup.order
    if index > index_limit:
        raise IndexExceedsLimitError(index, index_limit)

    degree = group.degree
    chain = PermGroup(subgroup.gens, base_prefix=range(1, degree + 1))

    start = _canonical_representative(chain, group.identity())
    reps = [start]
    lookup = {start: 0}
    # images[k][c] = coset reached from coset c by generator k (0-based)
    images: list[list[int]] = [[] for _ in group.generators]

    for c in range(index):
        rep = reps[c]
        for k, g in enumerate(group.generators):
            target = _canonical_representative(chain, compose(rep, g))
            if target not in lookup:
                lookup[target] = len(reps)
                reps.append(target)
            images[k].append(lookup[target])

    image_gens = tuple(Permutation.from_array(row) for row in images)
    image = PermGroup(GeneratorSet(index, image_gens, group.gens.names))
    kernel_order = group.order // image.order
    logger.info(f"Coset action of degree {index}: image order {image.order}, kernel order {kernel_order}")

    return CosetActionResult(
        image=image,
        point_to_coset={i + 1: rep for i, rep in enumerate(reps)},
        kernel_order=kernel_order,
        _subgroup_chain=chain,
        _coset_to_point={rep: i + 1 for i, rep in enumerate(reps)},
    )
