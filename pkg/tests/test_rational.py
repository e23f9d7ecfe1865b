from fractions import Fraction

import pytest
from hypothesis import given

from logpair.errors import ParseError, SchemaError, ZeroDenominator
from logpair.rational import as_rat, parse_rational, render
from strategies import rats


@pytest.mark.parametrize(
    "text, expected",
    [("1/2", Fraction(1, 2)), ("4/6", Fraction(2, 3)), ("3", Fraction(3)), ("-10/4", Fraction(-5, 2))],
)
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["", "1/", "/2", "1.5", "1/-2", " 1/2", "a", "1/2/3", "+1"])
def test_parse_rational_rejects_malformed(text):
    with pytest.raises(ParseError):
        parse_rational(text)


def test_parse_rational_zero_denominator():
    with pytest.raises(ZeroDenominator):
        parse_rational("3/0")


@given(rats())
def test_render_roundtrip(value):
    assert parse_rational(render(value)) == value


def test_render_omits_unit_denominator():
    assert render(Fraction(6, 3)) == "2"
    assert render(Fraction(-1, 2)) == "-1/2"


def test_as_rat_refuses_floats():
    with pytest.raises(SchemaError):
        as_rat(0.5)
    with pytest.raises(SchemaError):
        as_rat(True)
    assert as_rat(3) == 3
