"""Test foliation validation, degrees and charts."""

from fractions import Fraction

import pytest

from foliate.exceptions import InvalidFoliation
from foliate.foliation import (
    Foliation,
    affine_degree,
    affine_restrict,
    check_integrable,
    foliation_degree,
    has_jet2,
    homogenize,
    jet_order,
    saturate,
)
from foliate.io.formtext import parse_form

Z = ("z0", "z1", "z2")


def test_degree_zero_pencil():
    """z1 dz0 - z0 dz1 defines the degree zero pencil of lines."""
    omega = parse_form("z1 dz0 - z0 dz1", Z)
    assert foliation_degree(omega) == 0
    assert Foliation.from_form(omega, variables=Z).n == 2


def test_saturation_before_degree():
    """Q dP - P dQ with P = z0^2, Q = z1 z2 has degree one after saturation."""
    omega = parse_form("2 z0 z1 z2 dz0 - z0^2 z2 dz1 - z0^2 z1 dz2", Z)
    with pytest.raises(InvalidFoliation) as err:
        Foliation.from_form(omega, variables=Z)
    assert err.value.context["invariant"] == "saturated"
    saturated = saturate(omega)
    assert Foliation.from_form(saturated, variables=Z).degree == 1


@pytest.mark.parametrize(
    "text,invariant",
    [
        ("z0 dz0 + z1^2 dz1", "homogeneous"),
        ("z0 dz1", "radial"),
    ],
)
def test_invariant_violations(text: str, invariant: str):
    """Each validation failure names the invariant."""
    with pytest.raises(InvalidFoliation) as err:
        Foliation.from_form(parse_form(text, Z), variables=Z)
    assert err.value.context["invariant"] == invariant


def test_non_integrable_form_has_witness():
    """z dx + x dy + y dz is not integrable, the witness is (x + y + z) dx^dy^dz."""
    check = check_integrable(parse_form("z dx + x dy + y dz", ("x", "y", "z")))
    assert not check
    assert check.witness == parse_form("(x + y + z) dx^dy^dz", ("x", "y", "z"))


def test_homogenize_restricts_back(make_foliation):
    """The chart z0 = 1 of a homogenized form is the original form."""
    foliation = make_foliation("(z1^4 + z2^5) dz1 - z1 z2^4 dz2")
    assert foliation.degree == 4
    restricted = affine_restrict(foliation, 0)
    expected = parse_form("(z1^4 + z2^5) dz1 - z1 z2^4 dz2", ("z1", "z2", "z3"))
    assert restricted == expected
    assert affine_degree(expected) == 4


def test_jet_order(make_foliation):
    """The form vanishes to order four at the origin and not at (1, 0, 0)."""
    foliation = make_foliation("(z1^4 + z2^5) dz1 - z1 z2^4 dz2")
    chart = affine_restrict(foliation, 0)
    origin = dict.fromkeys(("z1", "z2", "z3"), Fraction(0))
    assert jet_order(chart, origin) == 4
    assert has_jet2(chart, origin)
    moved = {**origin, "z1": Fraction(1)}
    assert jet_order(chart, moved) == 0
    assert not has_jet2(chart, moved)


def test_homogenize_zero_form():
    """There is nothing to homogenize."""
    with pytest.raises(InvalidFoliation):
        homogenize(parse_form("0", ("z1",)), 0, ("z0", "z1"))


def test_chart_outside_range():
    """Charts are 0..n."""
    foliation = Foliation.from_form(parse_form("z1 dz0 - z0 dz1", Z), variables=Z)
    with pytest.raises(ValueError):
        foliation.chart_variables(3)
