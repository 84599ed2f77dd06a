"""Test the text format of coefficients and forms."""

from fractions import Fraction

import pytest

from foliate.algebra import QuadCoverRing, RatFun
from foliate.exceptions import FormSyntaxError, UnknownVariable
from foliate.io.formtext import parse_coefficient, parse_form, parse_point, tokenize

XYZ = ("x", "y", "z")


def test_juxtaposition_and_powers():
    """2 x y^2 and 2*x*y^2 agree."""
    assert parse_coefficient("2 x y^2", XYZ) == parse_coefficient("2*x*y^2", XYZ)
    assert parse_coefficient("x^-2", XYZ) == 1 / RatFun.var("x") ** 2


def test_wedges():
    """dx^dy is a 2-form."""
    form = parse_form("z dx^dy - dy^dz", XYZ)
    assert form.arity == 2
    assert form == parse_form("z dx^dy + dz^dy", XYZ)


@pytest.mark.parametrize(
    "text,column",
    [
        ("x dx + y dq", 10),
        ("x dx + q dy", 8),
    ],
)
def test_unknown_variables_are_located(text: str, column: int):
    """Errors point at the offending token."""
    with pytest.raises(UnknownVariable) as err:
        parse_form(text, XYZ)
    assert err.value.line == 1
    assert err.value.column == column


@pytest.mark.parametrize(
    "text",
    ["x dx +", "x", "dx^x", "x dx + dx^dy", "(x dx", "x/0 dx", "0^-1 dx", "x $ dx"],
)
def test_malformed(text: str):
    """Malformed text raises a syntax error."""
    with pytest.raises(FormSyntaxError):
        parse_form(text, XYZ)


def test_positions_follow_newlines():
    """The column restarts after a newline."""
    tokens = tokenize("x\n  dy", line=3, column=7)
    assert (tokens[0].line, tokens[0].column) == (3, 7)
    assert (tokens[1].line, tokens[1].column) == (4, 3)


def test_declarations():
    """Duplicate names and names clashing with differentials are refused."""
    with pytest.raises(FormSyntaxError):
        parse_form("dx", ("x", "x"))
    with pytest.raises(FormSyntaxError):
        parse_form("dx", ("x", "dx"))


def test_differential_of_non_coordinate():
    """On a cover the generator has no differential."""
    ring = QuadCoverRing("t", RatFun.var("s") * -2, ("s",))
    form = parse_form("t ds", ("s",), ring=ring)
    assert form.ring == ring
    with pytest.raises(UnknownVariable):
        parse_form("dt", ("s",), ring=ring)


def test_zero_form_and_points():
    """0 is the zero 1-form; points are comma separated rationals."""
    assert parse_form("0", XYZ).is_zero
    assert parse_point("1/2, -3,0") == (Fraction(1, 2), Fraction(-3), Fraction(0))
    with pytest.raises(FormSyntaxError):
        parse_point("1/0")
