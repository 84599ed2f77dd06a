"""Test the beta families produced along the case chains on generic chart data."""

import random

import pytest

from foliate.algebra import RatFun
from foliate.blowup import BlowupChartData
from foliate.classifier import Affine, PureProjective, get_handler
from foliate.classifier.handlers.cover_cases import (
    case5_middle,
    complete_square,
    half_cover,
    vertical_to_unit,
)
from foliate.classifier.provenance import Trail
from foliate.forms import DForm, descend, differential
from foliate.io.formtext import parse_form
from foliate.transverse import fiber_expansion

TAU = ("tau1", "tau2")
LINE = ("tau1",)


def nonzero(make, variables: tuple[str, ...]) -> RatFun:
    value = make(variables, fraction=False)
    while value.is_zero:
        value = make(variables, fraction=False)
    return value


def one_form(make, variables: tuple[str, ...]) -> DForm:
    return DForm.one_form(
        {name: nonzero(make, variables) for name in variables}, variables
    )


def log_d(f: RatFun, variables: tuple[str, ...]) -> DForm:
    return differential(f, variables) / f


def test_case2_flip(random_ratfun):
    """eta/F3 = dx + x theta2/F3 + x^2 theta3/F3 is affine with -theta2/F3."""
    theta2 = one_form(random_ratfun, LINE)
    theta3 = one_form(random_ratfun, LINE)
    f3 = nonzero(random_ratfun, LINE)
    chart = BlowupChartData(3, TAU, {2: theta2, 3: theta3}, {3: f3})
    cert = get_handler(2)(chart)
    assert isinstance(cert, Affine)
    w = RatFun.var("w")
    expected = DForm.differential("w") - theta3 / f3 - theta2 * (w / f3)
    assert parse_form(cert.omega1, cert.variables) == -(theta2 / f3)
    assert parse_form(cert.omega0, cert.variables) == expected
    assert cert.passed


def test_case3_riccati(random_ratfun):
    """theta2 = 0: beta_k = theta_{k+3}/F5 and omega2 = 2 theta5/F5."""
    theta = {j: one_form(random_ratfun, LINE) for j in (3, 4, 5)}
    f5 = nonzero(random_ratfun, LINE)
    cert = get_handler(3)(BlowupChartData(3, TAU, theta, {5: f5}))
    assert isinstance(cert, PureProjective)
    x = RatFun.var("x")
    omega1 = theta[4] / f5 + theta[5] * (x * 2 / f5)
    assert parse_form(cert.omega2, cert.variables) == theta[5] * (2 / f5)
    assert parse_form(cert.omega1, cert.variables) == omega1
    assert cert.passed


def test_case5_beta_family(random_ratfun):
    """The middle form of case 5 carries the five betas in closed form."""
    theta = {j: one_form(random_ratfun, TAU) for j in (2, 3, 4, 5)}
    f3, f4 = nonzero(random_ratfun, TAU), nonzero(random_ratfun, TAU)
    chart = BlowupChartData(3, TAU, theta, {3: f3, 4: f4})
    trail, t = case5_middle(chart)
    parts = fiber_expansion(trail.form, t)
    a = theta[5] * (f3 * f3 / f4**3)
    b = theta[4] * (f3 / (f4 * f4))
    c = theta[3] / f4
    d = theta[2] / f3
    e = log_d(f4, TAU) - log_d(f3, TAU)
    expected = [
        a,
        b - a * 4,
        a * 6 - b * 3 + c - e,
        b * 3 - a * 4 - c * 2 + d + e,
        a - b + c - d,
    ]
    assert set(parts.vertical) == {1}
    assert parts.vertical_coefficient(1) == -1
    for power, beta in enumerate(expected):
        assert parts.beta(power) == beta, power
    assert parts.top_power <= 4


def check_unit_vertical(make) -> None:
    rest, top = nonzero(make, TAU), nonzero(make, TAU)
    b0, b1, b2 = (one_form(make, TAU) for _ in range(3))
    z = RatFun.var("z")
    form = b0 + b1 * z + b2 * (z * z) + DForm.differential("z") * (rest + z * top)
    trail = Trail(form)
    vertical_to_unit(trail, "z", "t", TAU, rest, top)
    parts = fiber_expansion(trail.form, "t")
    p0 = b0 * (top / (rest * rest))
    p1, p2 = b1 / rest, b2 / top
    e = log_d(rest, TAU) - log_d(top, TAU)
    expected = [
        p0,
        p1 + e - p0 * 3,
        p0 * 3 - p1 * 2 + p2 - e,
        p1 - p0 - p2,
    ]
    assert parts.vertical == {0: RatFun.constant(1)}
    for power, beta in enumerate(expected):
        assert parts.beta(power) == beta, power


def test_unit_vertical_beta_family(random_ratfun):
    """(rest + z top) dz + b0 + z b1 + z^2 b2 becomes dT + cubic in T."""
    check_unit_vertical(random_ratfun)


def test_case6_cover_feeds_unit_vertical(random_ratfun):
    """On x^2 = z the even base part is 2z theta2 + 2z^2 theta4."""
    theta = {2: one_form(random_ratfun, TAU), 4: one_form(random_ratfun, TAU)}
    f3, f5 = nonzero(random_ratfun, TAU), nonzero(random_ratfun, TAU)
    chart = BlowupChartData(3, TAU, theta, {3: f3, 5: f5})
    trail = Trail(chart.eta)
    t = half_cover(trail, chart, "x", f3, f5)
    parts = fiber_expansion(descend(trail.form), t)
    p1, p2 = theta[2] * (2 / f3), theta[4] * (2 / f5)
    e = log_d(f3, TAU) - log_d(f5, TAU)
    assert parts.beta(0).is_zero
    assert parts.beta(1) == p1 + e
    assert parts.beta(2) == p2 - p1 * 2 - e
    assert parts.beta(3) == p1 - p2


def test_case7_square(random_ratfun):
    """y = x + F4/(2 F5) leaves the vertical part A + y^2 F5."""
    theta = {j: one_form(random_ratfun, TAU) for j in (2, 3, 4, 5)}
    f3, f4, f5 = (nonzero(random_ratfun, TAU) for _ in range(3))
    chart = BlowupChartData(3, TAU, theta, {3: f3, 4: f4, 5: f5})
    trail, y, rest = complete_square(chart)
    assert rest == f3 - f4 * f4 / (f5 * 4)
    big_y = RatFun.var(y)
    h = f4 / (f5 * 2)
    expected = DForm.zero(1, TAU + (y,))
    for j, form in theta.items():
        expected = expected + form * (big_y - h) ** (j - 1)
    vertical = rest + big_y * big_y * f5
    expected = expected + (DForm.differential(y) - differential(h, TAU)) * vertical
    assert trail.form == expected
    parts = fiber_expansion(trail.form, y)
    assert parts.vertical == {0: rest, 2: f5}


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(20))
def test_unit_vertical_beta_family_many(seed: int):
    """The closed form of the unit vertical chain on many samples."""
    rng = random.Random(seed)

    def make(variables: tuple[str, ...], fraction: bool = False) -> RatFun:
        value = RatFun.constant(rng.randint(-3, 3))
        for _ in range(3):
            term = RatFun.constant(rng.choice([-2, -1, 1, 2, 3]))
            for _ in range(rng.randint(1, 2)):
                term = term * RatFun.var(rng.choice(variables))
            value = value + term
        return value

    check_unit_vertical(make)
