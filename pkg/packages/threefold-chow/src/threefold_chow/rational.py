"""Exact rational helpers shared by every threefold package.

All arithmetic is done with :class:`fractions.Fraction`. Floats are rejected
outright: hypothesis checks compare signs and equalities exactly.
"""

from fractions import Fraction
from typing import Annotated, Any

from pydantic import PlainSerializer, PlainValidator, SerializationInfo

from .exceptions import IntegralityError


def as_fraction(value: Any) -> Fraction:
    """Convert int, Fraction, ``"p/q"`` strings or ``{"numerator", "denominator"}`` dicts.

    Raises:
        TypeError: For floats, bools and anything else that is not exact.
        ValueError: For malformed strings.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, dict) and set(value) == {"numerator", "denominator"}:
        return Fraction(int(value["numerator"]), int(value["denominator"]))
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def format_rational(value: Fraction | int) -> str:
    """Render ``p/q`` (or ``p`` when integral)."""
    return str(Fraction(value))


def require_integer(value: Fraction | int, what: str) -> int:
    """Return ``value`` as int or raise :class:`IntegralityError`."""
    q = Fraction(value)
    if q.denominator != 1:
        raise IntegralityError(f"{what} must be an integer, got {format_rational(q)}")
    return q.numerator


def _serialize(value: Fraction, info: SerializationInfo) -> Any:
    if info.mode_is_json():
        return {"numerator": value.numerator, "denominator": value.denominator}
    return value


# Pydantic field type for exact rationals
Rational = Annotated[
    Fraction,
    PlainValidator(as_fraction),
    PlainSerializer(_serialize, when_used="always"),
]
