"""Test the case handlers on hand-built blow-up chart data."""

import pytest

from foliate.classifier import (
    Affine,
    Case4NeedsData,
    FiniteGVS,
    PureProjective,
    RiccatiPullback,
    get_handler,
)
from foliate.classifier.handlers import flip_to_affine
from foliate.classifier.handlers.cover_cases import riccati_end
from foliate.classifier.provenance import Trail
from foliate.exceptions import DerivedRelationFailed
from foliate.io.formtext import parse_form

TAU = ("tau1", "tau2")


def same(text: str, cert, expected: str) -> bool:
    """A recorded form equals the expected one in the certificate coordinates."""
    return parse_form(text, cert.variables) == parse_form(expected, cert.variables)


def test_handler_refuses_other_case(make_chart):
    """A handler only accepts the tag it is registered for."""
    chart = make_chart({2: "dtau1"}, {3: "1"})
    with pytest.raises(ValueError):
        get_handler(5)(chart)


def test_case2_affine(make_chart):
    """eta = x dtau1 + dx flips to dw - w dtau1 with omega1 = -dtau1."""
    cert = get_handler(2)(make_chart({2: "dtau1"}, {3: "1"}))
    assert isinstance(cert, Affine)
    assert same(cert.omega0, cert, "dw - w dtau1")
    assert same(cert.omega1, cert, "-dtau1")
    assert cert.variables == ["tau1", "tau2", "w"]
    assert cert.passed


def test_case2_cubic_term_gives_gvs(make_chart):
    """dx + x^3 dtau1 has a G-V-S of length three."""
    cert = get_handler(2)(make_chart({4: "dtau1"}, {3: "1"}))
    assert isinstance(cert, FiniteGVS)
    assert cert.length == 3
    assert cert.field == "x"
    assert cert.passed


def test_case4_riccati(make_chart):
    """dw - (w^2 + tau1) dtau1 is the pull-back of dy - (y^2 + x) dx."""
    cert = get_handler(4)(make_chart({2: "dtau1", 4: "tau1 dtau1"}, {4: "1"}))
    assert isinstance(cert, RiccatiPullback)
    assert cert.psi1 == "1"
    assert cert.phi == {"x": "tau1", "y": "w"}
    assert same(cert.omega0, cert, "dw - (w^2 + tau1) dtau1")
    assert cert.passed


def test_case4_constant_u_is_affine(make_chart):
    """Without theta4 the Riccati form is dw - w^2 dtau1."""
    cert = get_handler(4)(make_chart({2: "dtau1"}, {4: "1"}))
    assert isinstance(cert, Affine)
    assert same(cert.omega1, cert, "-2/w dw")
    assert cert.passed


def test_case4_without_integrating_factor(make_chart):
    """No Darboux candidate integrates theta2."""
    chart = make_chart({2: "(tau1 + tau2^2) dtau1 + dtau2"}, {4: "1"})
    cert = get_handler(4)(chart)
    assert isinstance(cert, Case4NeedsData)
    assert "integrating factor" in cert.missing
    assert cert.forms["theta2"] == str(chart.theta_j(2))


def test_case5_affine(make_chart):
    """beta4 = 0 leaves ds + dtau1 + 2s dtau1 on the cover t^2 = -2s."""
    chart = make_chart(
        {2: "2 dtau1", 3: "5 dtau1", 4: "4 dtau1", 5: "dtau1"}, {3: "1", 4: "1"}
    )
    cert = get_handler(5)(chart)
    assert isinstance(cert, Affine)
    assert cert.cover == "t^2 = -2*s"
    assert cert.steps[-1].kind == "cover"
    assert same(cert.omega0, cert, "ds + dtau1 + 2 s dtau1")
    assert cert.passed


def test_case5_projective(make_chart):
    """beta4 = -dtau1 gives omega2 = -8 dtau1."""
    cert = get_handler(5)(make_chart({2: "2 dtau1", 3: "dtau1"}, {3: "1", 4: "1"}))
    assert isinstance(cert, PureProjective)
    assert same(cert.omega2, cert, "-8 dtau1")
    assert "structural system" in [c.name for c in cert.checks]
    assert cert.passed


def test_riccati_end_checks_structural_system():
    """dt + tau1 dtau2 has d beta0 != beta0 ^ beta1."""
    trail = Trail(parse_form("dt + tau1 dtau2", TAU + ("t",)))
    with pytest.raises(DerivedRelationFailed):
        riccati_end(trail, "t")


def test_case6_projective(make_chart):
    """Case 6 lifts to x^2 = z and ends in a Riccati form."""
    chart = make_chart({2: "dtau1", 4: "dtau1"}, {3: "tau1", 5: "tau1"})
    cert = get_handler(6)(chart)
    assert isinstance(cert, PureProjective)
    assert cert.cover is not None and cert.cover.startswith("x^2 = ")
    assert same(cert.omega2, cert, "-4/tau1 dtau1")
    assert cert.passed


def test_case6_gvs(make_chart):
    """A cubic chain end without a logarithmic structure falls to the G-V-S."""
    chart = make_chart({2: "tau1 dtau1", 4: "dtau1"}, {3: "1", 5: "1"})
    cert = get_handler(6)(chart)
    assert isinstance(cert, FiniteGVS)
    assert cert.length == 3
    assert cert.field == "t"
    assert cert.passed


def test_case7_projective(make_chart):
    """Case 7 after completing the square ends in a Riccati form."""
    chart = make_chart(
        {2: "-(tau1^2 + 1) dtau1", 3: "-2 tau1 dtau1", 4: "-dtau1"},
        {3: "tau1 (1 + tau1^2)", 4: "2 tau1^2", 5: "tau1"},
    )
    cert = get_handler(7)(chart)
    assert isinstance(cert, PureProjective)
    assert same(cert.omega2, cert, "4/tau1 dtau1")
    assert cert.passed


def test_case7_logarithmic_affine(make_chart):
    """eta = p dtau1 + q dx with p = x (x + 1)(x + 2) is affine with -dp/p."""
    chart = make_chart(
        {2: "2 dtau1", 3: "3 dtau1", 4: "dtau1"}, {3: "2", 4: "2", 5: "1"}
    )
    cert = get_handler(7)(chart)
    assert isinstance(cert, Affine)
    assert cert.steps == []
    assert cert.cover is None
    assert same(cert.omega1, cert, "-(3 x^2 + 6 x + 2)/(x^3 + 3 x^2 + 2 x) dx")
    assert cert.passed


def test_riccati_end_declines_cubic_forms():
    """Only chain ends of degree two in the fiber are read as Riccati forms."""
    variables = TAU + ("t",)
    assert riccati_end(Trail(parse_form("dt + t^3 dtau1", variables)), "t") is None
    cert = riccati_end(Trail(parse_form("2 dt + 2 t^2 dtau1", variables)), "t")
    assert isinstance(cert, PureProjective)
    assert same(cert.omega2, cert, "2 dtau1")


def test_flip_needs_closed_beta1():
    """d beta1 = 0 is a derived relation."""
    variables = TAU + ("x",)
    trail = Trail(parse_form("dx + x tau1 dtau2", variables))
    with pytest.raises(DerivedRelationFailed):
        flip_to_affine(
            trail,
            "x",
            TAU,
            parse_form("tau1 dtau2", TAU),
            parse_form("0", TAU),
        )
