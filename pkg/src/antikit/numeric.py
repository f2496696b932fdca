"""Exact parsing and printing of weights."""

from __future__ import annotations

from decimal import Decimal
from fractions import Fraction
from numbers import Rational

from .errors import FormatError


def parse_number(token: str) -> int | Fraction:
    """Integers stay ints; anything else becomes an exact Fraction."""
    try:
        return int(token)
    except ValueError:
        pass
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"{token!r} is not a number") from None


def exact(x) -> int | Fraction:
    """Convert floats through their shortest repr, so 0.1 becomes 1/10."""
    if isinstance(x, bool):
        raise TypeError("booleans are not weights")
    if isinstance(x, int):
        return x
    if isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, float):
        if x != x or x in (float("inf"), float("-inf")):
            raise FormatError(f"weight {x!r} is not finite")
        return Fraction(repr(x))
    return Fraction(x)


def format_number(x) -> str:
    if isinstance(x, float):
        return repr(x)
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    den = x.denominator
    for p in (2, 5):
        while den % p == 0:
            den //= p
    if den == 1:
        return format(Decimal(x.numerator) / Decimal(x.denominator), "f")
    return f"{x.numerator}/{x.denominator}"
