"""Exact rational scalars shared by every algebra in the package.

The scalar ring is the rationals.  Values are plain ``int`` or
``fractions.Fraction``; both are arbitrary precision and mix freely in
arithmetic, so no wrapper type is needed.  ``Fraction`` already enforces
the canonical form (positive denominator, lowest terms) and never rounds.
Whole numbers are collapsed back to ``int`` at construction boundaries so
the hot loops stay on machine integers.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction


def simplify(value):
    """Collapse a Fraction with denominator 1 to a plain int."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


def rat(numerator, denominator=1):
    """Build a scalar in canonical form."""
    return simplify(Fraction(numerator, denominator))


def rat_add(a, b):
    return simplify(a + b)


def rat_mul(a, b):
    return simplify(a * b)


def rat_neg(a):
    return -a


def rat_inv(a):
    """Multiplicative inverse; 0 has none."""
    if a == 0:
        raise ZeroDivisionError("0 has no multiplicative inverse")
    return simplify(Fraction(1) / a)


def parse_rational(text):
    """Parse the textual form ``p`` or ``p/q``."""
    return simplify(Fraction(str(text).strip()))


def format_rational(value):
    """Render ``p/q``, omitting the denominator when it is 1."""
    return str(simplify(value))
