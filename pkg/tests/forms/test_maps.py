"""Test pull-backs along rational maps and to double covers."""

import pytest

from foliate.algebra import QuadCoverRing, RatFun
from foliate.exceptions import DivisionByZero
from foliate.forms import (
    DForm,
    RationalMap,
    cover_pullback,
    descend,
    differential,
    jacobian_determinant,
    pullback,
)
from foliate.io.formtext import parse_form


def test_pullback_commutes_with_d(random_ratfun):
    """phi^* d = d phi^* on a random map."""
    source = ("u", "v")
    phi = RationalMap(
        {"x": random_ratfun(source), "y": random_ratfun(source) + 1}, source
    )
    omega = DForm.one_form({"x": RatFun.var("y"), "y": RatFun.var("x") ** 2})
    assert pullback(phi, omega.d()) == pullback(phi, omega).d()


def test_inversion():
    """x = 1/w turns dx into -dw/w^2."""
    phi = RationalMap({"x": 1 / RatFun.var("w")}, ("w",))
    pulled = pullback(phi, DForm.differential("x"))
    assert pulled == parse_form("-1/w^2 dw", ("w",))


def test_composition():
    """(phi o psi)^* = psi^* phi^*."""
    phi = RationalMap({"x": RatFun.var("u") ** 2}, ("u",))
    psi = RationalMap({"u": RatFun.var("t") + 1}, ("t",))
    omega = parse_form("x dx", ("x",))
    assert pullback(phi.after(psi), omega) == pullback(psi, pullback(phi, omega))


def test_cover_pullback_eliminates_generator_differential():
    """On t^2 = -2s the form dt becomes -ds/t = t ds/(2s)."""
    ring = QuadCoverRing("t", RatFun.var("s") * -2, ("s",))
    lifted = cover_pullback(DForm.differential("t", ("t",)), ring, "s")
    s = RatFun.var("s")
    assert lifted == DForm(1, [(("s",), ring.element(0, 1 / (s * 2)))], ("s",), ring)
    assert lifted.variables == ("s",)


def test_cover_pullback_needs_vertical_in_relation():
    """The vertical coordinate must occur in the relation."""
    ring = QuadCoverRing("t", RatFun.var("s") * -2, ("s",))
    with pytest.raises(ValueError):
        cover_pullback(differential(RatFun.var("t"), ("t", "u")), ring, "u")


def test_jacobian_determinant():
    """det of (x, y) = (u v, u + v) is v - u; a dropped coordinate gives zero."""
    u, v = RatFun.var("u"), RatFun.var("v")
    phi = RationalMap({"x": u * v, "y": u + v}, ("u", "v"))
    assert jacobian_determinant(phi, ("x", "y")) == v - u
    assert jacobian_determinant(phi, ("x",)).is_zero
    assert jacobian_determinant(RationalMap({"x": u, "y": u}, ("u", "v")), "xy") == 0


def test_descend_keeps_even_forms():
    """A form with no generator part lives on the base."""
    ring = QuadCoverRing("t", RatFun.var("s") * -2, ("s",))
    even = DForm(1, [(("s",), ring.element(RatFun.var("s")))], ("s",), ring)
    assert descend(even).ring is None
    assert descend(even) == parse_form("s ds", ("s",))
    with pytest.raises(ValueError):
        descend(DForm(1, [(("s",), ring.gen)], ("s",), ring))


def random_map(make, source: tuple[str, ...], targets: tuple[str, ...]) -> RationalMap:
    return RationalMap({name: make(source) for name in targets}, source)


@pytest.mark.parametrize("samples", [2, pytest.param(200, marks=pytest.mark.slow)])
def test_pullback_is_functorial(random_ratfun, samples: int):
    """(phi o psi)^* = psi^* phi^* on random maps and forms."""
    for _ in range(samples):
        phi = random_map(random_ratfun, ("u", "v"), ("x", "y"))
        psi = random_map(random_ratfun, ("s", "t"), ("u", "v"))
        omega = DForm.one_form(
            {"x": random_ratfun(("x", "y")), "y": random_ratfun(("x", "y"))},
            ("x", "y"),
        )
        try:
            direct = pullback(phi.after(psi), omega)
            stepwise = pullback(psi, pullback(phi, omega))
        except DivisionByZero:
            continue
        assert direct == stepwise


@pytest.mark.parametrize("samples", [3, pytest.param(200, marks=pytest.mark.slow)])
def test_cover_pullback_matches_direct_substitution(random_ratfun, samples: int):
    """(p + t q) dt + (a + t b) ds on t^2 = r: dt = t dr/(2r)."""
    for _ in range(samples):
        t = RatFun.var("t")
        r = random_ratfun(("s",))
        if r.is_zero or r.is_constant:
            continue
        p, q, a, b = (random_ratfun(("s",)) for _ in range(4))
        ring = QuadCoverRing("t", r, ("s",))
        omega = DForm.one_form({"t": p + t * q, "s": a + t * b}, ("t", "s"))
        dr = r.diff("s")
        expected = ring.element(a + q * dr / 2, b + p * dr / (r * 2))
        lifted = cover_pullback(omega, ring, "s")
        assert lifted == DForm(1, [(("s",), expected)], ("s",), ring)
