"""Test quadratic cover rings."""

import pytest

from foliate.algebra import QuadCoverRing, RatFun, quad_reduce
from foliate.exceptions import DivisionByZero, IncompatibleRings


@pytest.fixture()
def ring() -> QuadCoverRing:
    """t^2 = -2 s."""
    return QuadCoverRing("t", RatFun.var("s") * -2, ("s",))


def test_generator_squares_to_relation(ring: QuadCoverRing):
    """The defining relation holds."""
    assert ring.gen * ring.gen == ring.element(RatFun.var("s") * -2)
    assert str(ring) == "t^2 = -2*s"


def test_reduce_even_and_odd_powers(ring: QuadCoverRing):
    """t^3 + t^2 reduces to -2s + t(-2s)."""
    t = RatFun.var("t")
    s = RatFun.var("s")
    reduced = quad_reduce(t**3 + t**2, ring)
    assert reduced == ring.element(s * -2, s * -2)


def test_inverse_through_norm(ring: QuadCoverRing):
    """(1 + t)(1 + t)^-1 = 1."""
    value = ring.element(1, 1)
    assert value * value.inverse() == ring.element(1)
    assert (value / value) == ring.element(1)


def test_zero_norm_is_not_invertible():
    """t^2 = 1 has zero divisors."""
    square = QuadCoverRing("t", RatFun.constant(1))
    with pytest.raises(DivisionByZero):
        square.element(1, 1).inverse()


def test_degenerate_relation():
    """t^2 = 0 and relations involving t are rejected."""
    with pytest.raises(DivisionByZero):
        QuadCoverRing("t", RatFun.constant(0))
    with pytest.raises(ValueError):
        QuadCoverRing("t", RatFun.var("t"))


def test_mixing_covers(ring: QuadCoverRing):
    """Elements of different covers do not mix."""
    other = QuadCoverRing("t", RatFun.var("s") * 3, ("s",))
    with pytest.raises(IncompatibleRings):
        quad_reduce(other.gen, ring)


def test_derivative_of_generator(ring: QuadCoverRing):
    """dt/ds = t r'/(2r) = t/(2s)."""
    s = RatFun.var("s")
    assert ring.gen.diff("s") == ring.element(0, 1 / (s * 2))


@pytest.mark.parametrize("samples", [3, pytest.param(200, marks=pytest.mark.slow)])
def test_reduce_is_idempotent_and_multiplicative(random_ratfun, samples: int):
    """reduce(reduce(f)) = reduce(f) and reduce(fg) = reduce(f) reduce(g)."""
    names = ("s", "t")
    for _ in range(samples):
        relation = random_ratfun(("s",))
        if relation.is_zero:
            continue
        ring = QuadCoverRing("t", relation, ("s",))
        f, g = random_ratfun(names), random_ratfun(names)
        try:
            once = quad_reduce(f, ring)
            product = quad_reduce(f * g, ring)
            expected = once * quad_reduce(g, ring)
        except DivisionByZero:
            continue
        assert quad_reduce(once, ring) == once
        assert product == expected
