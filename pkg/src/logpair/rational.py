"""Rational parsing and rendering.

Rationals are plain :class:`fractions.Fraction` values. On the wire they are
strings ``"p/q"`` with ``q`` omitted when it is 1.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

from logpair.errors import ParseError, SchemaError, ZeroDenominator

Rat = Fraction

_RAT_RE = re.compile(r"-?[0-9]+(/[0-9]+)?")


def parse_rational(text: str) -> Fraction:
    """Parse ``-?digits(/digits)?`` into a canonical fraction.

    >>> parse_rational("4/6")
    Fraction(2, 3)
    """
    if not isinstance(text, str) or _RAT_RE.fullmatch(text) is None:
        raise ParseError(f"not a rational literal: {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ZeroDenominator(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def render(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def as_rat(value: object) -> Fraction:
    """Coerce ints, fractions and rational literals; floats are refused."""
    if isinstance(value, bool):
        raise SchemaError(f"expected a rational, got {value!r}")
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, Rational):
        return Fraction(value)
    raise SchemaError(f"expected an exact rational, got {type(value).__name__} {value!r}")
