"""Rational scalars.

``fractions.Fraction`` already keeps values reduced with a positive
denominator, so it serves as the rational type throughout.  This module adds
the "p/q" string format used by every external interface.
"""
from fractions import Fraction

Rational = Fraction


def to_rational(x):
    """Coerce int, Fraction or a "p/q" / decimal string to Fraction.

    Floats are refused: they would silently inject binary rounding.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def fmt(q):
    """Format as "p/q", or "p" for integers."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
