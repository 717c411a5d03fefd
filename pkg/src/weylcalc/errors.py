"""Exception types shared across the package.

Everything raised on bad input derives from WeylcalcError; the CLI maps
that family to exit code 2 and anything else to exit code 1.
"""

from __future__ import annotations


class WeylcalcError(Exception):
    """Base class for all input and precondition failures."""


class InvalidSegment(WeylcalcError):
    """A segment violates i <= j or its length exceeds rank + 1."""


class InvalidRoot(WeylcalcError):
    """A root index (i, j) outside 1 <= j - i <= rank."""


class NotInRootLattice(WeylcalcError):
    """An l-weight is not an integer combination of the root generators."""


class NotDominant(WeylcalcError):
    """An operation needed a dominant l-weight (all exponents >= 0)."""


class PreconditionViolated(WeylcalcError):
    """A documented precondition of an operation does not hold."""


class IndexOutOfRange(WeylcalcError):
    """A 1-based part index is outside the tuple."""


class ParseError(WeylcalcError):
    """Malformed text input; carries the byte offset of the failure."""

    def __init__(self, message: str, offset: int = 0):
        super().__init__(message)
        self.offset = offset


class RangeError(WeylcalcError):
    """A parsed segment has j < i."""
