"""Exception hierarchy shared by every hochq module."""

from __future__ import annotations


class HochqError(Exception):
    """Base class for all library errors."""


class StructuralError(HochqError):
    """Operands do not fit together (scalar groups, shapes, indices)."""


class InstanceValidationError(HochqError):
    """An instance violates one of its invariants.

    `location` names the offending entry, e.g. ``q[0][1]`` or ``group[3]``.
    """

    def __init__(self, message: str, location: str) -> None:
        super().__init__(f"{location}: {message}")
        self.location = location


class DiagonalScalarError(InstanceValidationError):
    """q[i][i] is not the identity scalar."""


class InverseSymmetryError(InstanceValidationError):
    """q[j][i] is not the inverse of q[i][j]."""


class FiniteOrderError(InstanceValidationError):
    """A group character has a nonzero free part."""


class GroupClosureError(InstanceValidationError):
    """The element list is not closed under products or inverses."""


class DuplicateGroupElementError(InstanceValidationError):
    """Two group elements carry the same character vector."""


class InstanceParseError(HochqError):
    """An instance file could not be parsed."""

    def __init__(self, message: str, field: str = "") -> None:
        super().__init__(f"{field}: {message}" if field else message)
        self.field = field


class DegreeMismatchError(HochqError):
    """A cochain or tensor has the wrong degree for the requested map."""


class PreconditionError(HochqError):
    """An operation was called outside its domain."""


class SpecializationBoundError(HochqError):
    """A scalar lies outside the box on which a specialization is injective."""


class CyclotomicZeroDivisionError(HochqError, ZeroDivisionError):
    """Inversion of zero in a cyclotomic field."""
