"""
Error hierarchy for the Lie moduli engine.

Every error derives from LieModuliError and from the built-in exception a
caller would naturally expect, so `except ValueError` keeps working.
"""
from typing import Any, Optional, Tuple


class LieModuliError(Exception):
    """Root of all errors raised by lie_moduli_core."""


class DimensionMismatchError(LieModuliError, ValueError):
    """Cochains, matrices or vectors with incompatible dimensions or shapes."""


class SingularMatrixError(LieModuliError, ValueError):
    """A matrix that had to be invertible has determinant zero."""


class SingularBasisChangeError(SingularMatrixError):
    """A basis change G with det(G) = 0."""


class InvalidCodifferentialError(LieModuliError, ValueError):
    """A structure matrix that does not satisfy the Jacobi identity."""

    def __init__(self, message: str, failing_triple: Optional[Tuple[int, int, int]] = None):
        super().__init__(message)
        self.failing_triple: Optional[Tuple[int, int, int]] = failing_triple


class InvalidBasisError(LieModuliError, ValueError):
    """A user supplied cocycle basis fails the cocycle or independence check."""


class NoRationalRepresentativeError(LieModuliError, ValueError):
    """A canonical invariant tuple whose parameters are not rational."""

    def __init__(self, message: str, invariants: Tuple[Any, ...] = ()):
        super().__init__(message)
        self.invariants: Tuple[Any, ...] = tuple(invariants)


class UnknownPointSpecError(LieModuliError, KeyError):
    """A point-spec string that does not name a catalogued point."""

    def __str__(self) -> str:
        # KeyError quotes its argument; keep messages readable.
        return str(self.args[0]) if self.args else ''


class MalformedInputError(LieModuliError, ValueError):
    """A JSON document that cannot be read as a codifferential."""


class InternalConsistencyError(LieModuliError, RuntimeError):
    """Two independent computations disagree. Always a bug."""
