"""Exact scalars.

Scalars are ``fractions.Fraction`` values; this module holds the parsing and
formatting rules used by every file format.
"""

from fractions import Fraction
from typing import Union

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def to_scalar(value: Union[int, str, Fraction]) -> Fraction:
    """Convert an int, a ``"p/q"`` string or a Fraction to a Scalar.
    
    Raises:
        ValueError: If the value is not an exact rational (floats are refused)
    """
    if isinstance(value, bool):
        raise ValueError(f"Not a rational number: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"Not a rational number: {value!r}")
    raise ValueError(f"Not a rational number: {value!r}")


def format_scalar(value: Fraction) -> str:
    """Format a scalar as a reduced ``"p/q"`` string (denominator always shown)."""
    return f"{value.numerator}/{value.denominator}"


def pretty_scalar(value: Fraction) -> str:
    """Short human-readable form: ``"3"`` for integers, ``"3/4"`` otherwise."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
