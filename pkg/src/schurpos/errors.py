"""Exception hierarchy shared by the library and the CLI."""
from __future__ import annotations


class SchurposError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(SchurposError, ValueError):
    """Matrix shapes are incompatible with the requested operation."""


class DomainError(SchurposError, ValueError):
    """An argument lies outside the domain of the operation."""


class SingularError(DomainError):
    """A determinant that must be nonzero vanished."""


class ParseError(SchurposError, ValueError):
    """Malformed symmetric-polynomial expression or CLI argument."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class ValidationError(ParseError):
    """Well-formed syntax whose bracket contents are not a partition."""


class DegreeMismatchError(ParseError):
    """Expression terms disagree on degree or basis."""
