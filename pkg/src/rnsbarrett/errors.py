"""Exception types raised across the package.

Every class maps to one failure mode of the public API. All inherit from
RnsBarrettError so callers can catch the package's errors wholesale.
"""


class RnsBarrettError(Exception):
    """Base class for every error raised by this package."""


class ModulusTooSmall(RnsBarrettError):
    """A modulus smaller than 2 was supplied."""


class DuplicateOrNonCoprime(RnsBarrettError):
    """Two moduli in a set share a common factor."""


class OutOfRange(RnsBarrettError):
    """An integer lies outside the representable range [0, M)."""


class SetMismatch(RnsBarrettError):
    """Residue vectors over different moduli sets were combined."""


class PartitionMismatch(RnsBarrettError):
    """A partition and a residue vector refer to different moduli sets."""


class EmptyKnownSet(RnsBarrettError):
    """A partial residue vector has no known positions."""


class ConditionViolation(RnsBarrettError):
    """A divisor or capacity condition required by the reduction fails."""


class InputOutOfRange(RnsBarrettError):
    """An operand exceeds the admissible input range for its range case."""


class ContextMismatch(RnsBarrettError):
    """Residue vectors do not belong to the context's moduli set."""


class CaseMismatch(RnsBarrettError):
    """The context's range case does not fit the requested operation."""


class SelectionFailed(RnsBarrettError):
    """No satisfying parameter set was found within the search budget."""


class NotCoprime(RnsBarrettError):
    """Arguments that must be coprime are not."""
