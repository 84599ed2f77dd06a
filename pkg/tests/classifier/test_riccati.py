"""Test Riccati forms, the rational ansatz and the integrating factor search."""

from fractions import Fraction

import pytest

from foliate.algebra import RatFun
from foliate.classifier import (
    Case4Hints,
    find_integrating_factor,
    rational_function_of,
    riccati_form,
)
from foliate.classifier.darboux import (
    coefficient_factors,
    is_integrating_factor,
    logarithmic_witness,
)
from foliate.exceptions import NonRationalDataNeeded
from foliate.io.formtext import parse_coefficient, parse_form

TAU = ("tau1", "tau2")


def test_riccati_form_default_psi2():
    """dy - (y^2 + x) psi1 dx."""
    form = riccati_form(RatFun.constant(2))
    assert form == parse_form("dy - 2 (y^2 + x) dx", ("x", "y"))


@pytest.mark.parametrize(
    "lam,u,psi",
    [
        ("tau1^2 + 1", "tau1", "x^2 + 1"),
        ("2/(tau1 + tau2)", "tau1 + tau2", "2/x"),
        ("tau1^2 tau2^2", "tau1 tau2", "x^2"),
    ],
)
def test_rational_function_of(lam: str, u: str, psi: str):
    """lambda is found as a function of u."""
    found = rational_function_of(
        parse_coefficient(lam, TAU), parse_coefficient(u, TAU), 4
    )
    assert found == parse_coefficient(psi, ("x",))


def test_rational_function_of_fails():
    """tau2 is not a function of tau1."""
    assert rational_function_of(RatFun.var("tau2"), RatFun.var("tau1"), 3) is None
    with pytest.raises(ValueError):
        rational_function_of(RatFun.var("tau2"), RatFun.constant(1), 3)


def test_closed_form_needs_no_factor():
    """1 integrates a closed form."""
    search = find_integrating_factor(parse_form("tau2 dtau1 + tau1 dtau2", TAU))
    assert search.source == "closed"
    assert search.factor == 1


def test_darboux_search():
    """tau2 dtau1 - tau1 dtau2 has a monomial integrating factor."""
    form = parse_form("tau2 dtau1 - tau1 dtau2", TAU)
    search = find_integrating_factor(form)
    assert search.source == "darboux"
    assert search.factor is not None
    assert is_integrating_factor(form, search.factor)


def test_hint_is_tried_first():
    """A valid hint wins over the search."""
    form = parse_form("tau2 dtau1 - tau1 dtau2", TAU)
    hint = parse_coefficient("tau2^2", TAU)
    search = find_integrating_factor(form, hint=hint)
    assert search.source == "hint"
    assert search.tried == 2


def test_hint_in_chart():
    """z_j goes to tau_j and the last coordinate to one."""
    variables = ("z1", "z2", "z3")
    hint = Case4Hints(parse_coefficient("z1 + z3", variables), Fraction(2))
    expected = parse_coefficient("(tau1 + 1)^2", TAU)
    assert hint.factor_in_chart(variables, TAU) == expected


def test_hint_with_root_needs_other_data():
    """A fractional exponent is out of reach."""
    hint = Case4Hints(parse_coefficient("z1", ("z1",)), Fraction(1, 2))
    with pytest.raises(NonRationalDataNeeded):
        hint.factor_in_chart(("z1", "z2"), ("tau1",))


def test_logarithmic_witness_solves_for_exponents():
    """p dtau1 + q dx with p = x (x + 1)(x + 2) has omega1 = -dp/p."""
    variables = ("tau1", "x")
    form = parse_form("(x^3 + 3 x^2 + 2 x) dtau1 + (x^2 + 2 x + 2) dx", variables)
    witness = logarithmic_witness(form, coefficient_factors(form))
    assert witness is not None
    assert witness.omega1 == parse_form(
        "-(3 x^2 + 6 x + 2)/(x^3 + 3 x^2 + 2 x) dx", variables
    )
    assert all(witness.checks())


def test_logarithmic_witness_on_underdetermined_system():
    """x dy - 2 y dx has a line of exponent pairs; any of them is a witness."""
    form = parse_form("x dy - 2 y dx", ("x", "y"))
    witness = logarithmic_witness(form, coefficient_factors(form))
    assert witness is not None
    assert witness.omega0.d() == witness.omega0.wedge(witness.omega1)


def test_no_logarithmic_witness():
    """x (tau1 + x^2) dtau1 + (1 + x^2) dx has no product of factor powers."""
    variables = ("tau1", "x")
    form = parse_form("x (tau1 + x^2) dtau1 + (1 + x^2) dx", variables)
    assert logarithmic_witness(form, coefficient_factors(form)) is None
    assert logarithmic_witness(form, []) is None
