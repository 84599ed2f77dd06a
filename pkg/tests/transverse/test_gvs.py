"""Test Godbillon-Vey sequences."""

import pytest

from foliate.exceptions import NotTransverse
from foliate.forms import DForm, VField
from foliate.io.formtext import parse_form
from foliate.transverse import extended_form, gvs_compute, gvs_triple, gvs_verify

XY = ("x", "y")
D_X = VField.coordinate("x", XY)


@pytest.mark.parametrize(
    "text,length",
    [
        ("dx", 0),
        ("dx + x dy", 1),
        ("dx + x^2 dy", 2),
        ("dx + x^3 dy", 3),
        ("dx + x^4 dy", 4),
        ("dx + (x^4 + y x) dy", 4),
    ],
)
def test_lengths(text: str, length: int):
    """The Lie derivative along d/dx lowers the power of x by one."""
    sequence = gvs_compute(parse_form(text, XY), D_X)
    assert sequence.finite
    assert sequence.length == length
    assert gvs_verify(sequence)


def test_normalizes_contraction():
    """omega0 has i_X(omega0) = 1."""
    sequence = gvs_compute(parse_form("y dx + x y dy", XY), D_X)
    assert sequence[0] == parse_form("dx + x dy", XY)
    assert sequence[5] == DForm.zero(1, XY)


def test_cap():
    """A sequence reaching the cap is not finite and does not verify."""
    sequence = gvs_compute(parse_form("dx + x^3 dy", XY), D_X, cap=2)
    assert not sequence.finite
    assert not gvs_verify(sequence)
    with pytest.raises(ValueError):
        gvs_triple(sequence)


def test_tangent_field():
    """d/dx is tangent to dy."""
    with pytest.raises(NotTransverse):
        gvs_compute(parse_form("dy", XY), D_X)


def test_extended_form_uses_fresh_variable():
    """The extra coordinate avoids the names in use."""
    sequence = gvs_compute(parse_form("dz + z dx", ("x", "z")), VField.coordinate("z"))
    big_omega, name = extended_form(sequence)
    assert name not in ("x", "z")
    assert name in big_omega.variables


def test_triple_of_short_sequence():
    """dx + x^2 dy gives omega2 = 2 dy."""
    triple = gvs_triple(gvs_compute(parse_form("dx + x^2 dy", XY), D_X))
    assert triple.pure
    assert triple.omega2 == parse_form("2 dy", XY)
    assert all(triple.checks())
