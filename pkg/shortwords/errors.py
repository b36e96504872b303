"""
Exception hierarchy for the toolkit.

Errors fall into three families that the CLI maps to exit codes:
InputError (1), PreconditionError (2) and ResourceLimitError (3).
"""


class ShortwordsError(Exception):
    """Base class for all toolkit errors."""

    exit_code = 1


# ============================================================================
# Malformed input
# ============================================================================


class InputError(ShortwordsError):
    """Raised when textual input (cycle notation, generator files) is malformed."""

    exit_code = 1


class CycleSyntaxError(InputError):
    """Raised when a cycle-notation string cannot be parsed."""

    def __init__(self, message: str, column: int | None = None):
        super().__init__(message)
        self.column = column


class RepeatedPointError(CycleSyntaxError):
    """Raised when a point occurs twice in one permutation."""

    pass


class PointOutOfRangeError(CycleSyntaxError):
    """Raised when a point exceeds the permutation degree."""

    pass


class GeneratorFileError(InputError):
    """Raised when a generator file is malformed."""

    def __init__(self, message: str, path: str, line: int, column: int = 1):
        super().__init__(f"{path}:{line}:{column}: {message}")
        self.path = path
        self.line = line
        self.column = column


# ============================================================================
# Violated preconditions
# ============================================================================


class PreconditionError(ShortwordsError):
    """Raised when an operation's inputs violate its preconditions."""

    exit_code = 2


class DegreeMismatchError(PreconditionError):
    """Raised when permutations or groups of different degree are combined."""

    pass


class NotASubgroupError(PreconditionError):
    """Raised when a coset action is requested for a non-subgroup."""

    pass


class ArityMismatchError(PreconditionError):
    """Raised when a frontier word uses an index above the arity."""

    pass


class IndexOutOfRangeError(PreconditionError):
    """Raised when a word refers to a generator that does not exist."""

    pass


class TargetNotCoveredError(PreconditionError):
    """Raised when the target subgroup is not inside <gens, exclude>."""

    def __init__(self, message: str = "can't generate subgroup"):
        super().__init__(message)


class ElementNotContainedError(PreconditionError):
    """Raised when an element is not a member of the relevant group."""

    pass


class ChainViolatedError(PreconditionError):
    """Raised when a two-step search is given S not contained in T."""

    pass


class NotATwoGroupError(PreconditionError):
    """Raised when a 2-group is required but the group order has an odd factor."""

    pass


class CheckerPreconditionError(PreconditionError):
    """Raised when the maximality checker gets a subgroup that is not el. ab. normal."""

    pass


# ============================================================================
# Resource limits
# ============================================================================


class ResourceLimitError(ShortwordsError):
    """Raised when a configured resource limit stops a computation."""

    exit_code = 3


class OrderExceedsLimitError(ResourceLimitError):
    """Raised when a brute-force path would enumerate more elements than allowed."""

    def __init__(self, order: int, limit: int):
        super().__init__(f"group order {order} exceeds element limit {limit}")
        self.order = order
        self.limit = limit


class IndexExceedsLimitError(ResourceLimitError):
    """Raised when a coset action would exceed the index limit."""

    def __init__(self, index: int, limit: int):
        super().__init__(f"subgroup index {index} exceeds coset index limit {limit}")
        self.index = index
        self.limit = limit


class FrontierExhaustedError(ResourceLimitError):
    """Raised when the word frontier exceeds its cap or a lookup runs out of levels."""

    pass


class SingleGeneratorExhaustedError(ResourceLimitError):
    """Raised when a one-generator search has passed the generator's order."""

    def __init__(self, message: str = "use other method"):
        super().__init__(message)
