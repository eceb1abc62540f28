"""
Exceptions for the quaternion and generalized-inverse layers.

Every error derives from GInverseError and from the builtin it refines, so
callers can catch either the domain type or the familiar Python one.
"""


class GInverseError(Exception):
    """Base class for all errors raised by the project."""


class ZeroDivisor(GInverseError, ZeroDivisionError):
    """Inverse of the zero quaternion (or of a singular matrix) requested."""


class LiteralError(GInverseError, ValueError):
    """A quaternion literal or matrix file could not be parsed."""


class DimensionMismatch(GInverseError, ValueError):
    """Operand shapes are incompatible with the operation."""


class DimensionLimitExceeded(DimensionMismatch):
    """A determinantal sum would expand a matrix above the configured cap."""

    def __init__(self, n, limit):
        self.n = n
        self.limit = limit
        super().__init__(
            f"dimension {n} exceeds the determinant cap of {limit} "
            f"(raise GINVERSE['MAX_DIM'] or pass --max-dim)"
        )


class IndexOutOfRange(GInverseError, IndexError):
    """A 1-based index lies outside the matrix."""


class NotHermitian(GInverseError, ValueError):
    """The operation requires a Hermitian matrix."""


class NonRealResult(GInverseError, ArithmeticError):
    """A Hermitian determinant came out with a nonzero imaginary part."""


class RankDegenerate(GInverseError, ArithmeticError):
    """A principal-minor denominator vanished; a rank precondition failed."""


class IndexMismatch(GInverseError, ValueError):
    """The matrix index does not fit the requested formula."""


class UnknownVariant(GInverseError, ValueError):
    """No formula variant of that name exists for the inverse."""
