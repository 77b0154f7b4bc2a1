"""Exception types raised by the polyadic arithmetic library.

Every domain error derives from :class:`PolyarithError` so callers (and the
CLI) can map library failures to a single exit path while still seeing the
precise error name.
"""

from __future__ import annotations


class PolyarithError(Exception):
    """Base class for all domain errors."""


class BadModulus(PolyarithError):
    """Congruence modulus must be a positive integer."""


class ResidueOutOfRange(PolyarithError):
    """Residue must satisfy 0 <= residue <= modulus - 1."""


class NotInClass(PolyarithError):
    """An integer is not a representative of the given congruence class."""


class NoAritySolution(PolyarithError):
    """No multiplication arity closes the class; the quantization conditions
    have no solution."""


class BadArityShape(PolyarithError):
    """A user-supplied arity pair fails the quantization conditions for the
    class, or an arity is below 2."""


class ClassMismatch(PolyarithError):
    """Elements of distinct congruence classes never interoperate."""


class ArityMismatch(PolyarithError):
    """An operation received the wrong number of operands."""


class NonAdmissibleWordLength(PolyarithError):
    """Word width w is not of the form count*(arity-1)+1.

    Carries the nearest admissible widths below and above the rejected one.
    """

    def __init__(self, message: str, width: int, below: int, above: int):
        super().__init__(message)
        self.width = width
        self.nearest_below = below
        self.nearest_above = above


class InconsistentLengths(PolyarithError):
    """Digit count does not satisfy the addition/multiplication count
    consistency constraint."""


class DigitOutOfRange(PolyarithError):
    """A strict numeral digit index lies outside [0, base_index - 1]."""


class BadBase(PolyarithError):
    """Numeral base must be an in-class element with index >= 2."""


class BaseMismatch(PolyarithError):
    """Numerals combined in one operation must share the same base."""


class NotRepresentable(PolyarithError):
    """No admissible digit string over the given base evaluates to the
    value."""


class CatalogTooLarge(PolyarithError):
    """Requested catalog exceeds the configured record cap."""


class TowerShapeMismatch(PolyarithError):
    """A mixed-base tower has the wrong number of base entries for its digit
    position."""


class LengthMismatch(PolyarithError):
    """Digit vector length does not match the mixed-base scheme."""
