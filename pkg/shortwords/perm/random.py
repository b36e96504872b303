"""
Product-replacement random elements.
"""

import random
from collections.abc import Sequence

from .permutation import Permutation, compose, inverse

EXTRA_SLOTS = 5
ACCUMULATORS = 5
SCRAMBLE_STEPS = 30
SCRAMBLE_FACTOR = 4


class ProductReplacer:
    """
    Random group elements by the "rattle" variant of product replacement.

    Every returned element is a product of generators and their inverses, so it
    always lies in the generated group. The sequence is fully determined by the seed.
    """

    def __init__(self, degree: int, gens: Sequence[Permutation], seed: int = 0):
        self.degree = degree
        self.rng = random.Random(seed)
        identity = Permutation.identity(degree)
        self.reservoir = [identity] * EXTRA_SLOTS + list(gens)
        self.accumulators = [identity] * ACCUMULATORS
        self.accu = 0
        self.trivial = not any(not g.is_identity() for g in gens)

        if not self.trivial:
            steps = max(SCRAMBLE_STEPS, SCRAMBLE_FACTOR * len(gens))
            for _ in range(steps):
                self._stir()

    def _maybe_invert(self, p: Permutation) -> Permutation:
        return inverse(p) if self.rng.randrange(2) else p

    def _stir(self) -> Permutation:
        """One replacement step; returns the updated accumulator."""
        size = len(self.reservoir)
        i = self.rng.randrange(1, size)
        j = self.rng.randrange(1, size)

        c = compose(self.reservoir[0], self._maybe_invert(self.reservoir[i]))
        self.reservoir[0] = c

        q = compose(self.reservoir[j], self._maybe_invert(c))
        self.reservoir[j] = q

        self.accu = (self.accu + 1) % len(self.accumulators)
        r = compose(self.accumulators[self.accu], self._maybe_invert(q))
        self.accumulators[self.accu] = r
        return r

    def sample(self) -> Permutation:
        if self.trivial:
            return Permutation.identity(self.degree)
        return self._stir()
