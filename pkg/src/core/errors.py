"""Error hierarchy.

Every error derives from ValueError so callers can catch input problems
uniformly.
"""

from typing import Optional


class DerivatioError(ValueError):
    """Base class for all toolkit errors."""


class QuiverError(DerivatioError):
    """Invalid quiver, path or relation data."""


class DSLSyntaxError(QuiverError):
    """Quiver DSL text that cannot be parsed or fails validation.
    
    Attributes:
        line: 1-based line of the offending token (None if unknown)
        column: 1-based column of the offending token (None if unknown)
    """
    
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        self.detail = message
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class ConstructionError(DerivatioError):
    """An algebra could not be built or failed a construction self-test."""


class DecompositionError(DerivatioError):
    """A map has no standard decomposition or is not a Lie derivation."""


class PeirceError(DerivatioError):
    """Invalid idempotent, vertex or block data for a Peirce view."""
