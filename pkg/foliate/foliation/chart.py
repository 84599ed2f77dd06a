"""Affine charts: translation, homogeneous pieces and jet order."""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from foliate.algebra.ratfun import RatFun
from foliate.exceptions import InvalidFoliation
from foliate.forms import DForm, RationalMap, pullback

Point = Mapping[str, Fraction]


def translate(omega_e: DForm, point: Point) -> DForm:
    """Move the point to the origin: z -> z + p."""
    shift = {
        name: RatFun.var(name) + Fraction(value)
        for name, value in point.items()
        if value
    }
    if not shift:
        return omega_e
    return pullback(RationalMap(shift, omega_e.variables), omega_e)


def homogeneous_pieces(omega_e: DForm) -> dict[int, DForm]:
    """Split a polynomial form by coefficient degree."""
    parts: dict[int, list] = {}
    for key, coeff in omega_e.items():
        if not isinstance(coeff, RatFun) or not coeff.is_polynomial:
            raise InvalidFoliation(f"Coefficient {coeff} is not a polynomial")
        poly = coeff.num.scale(1 / coeff.den.constant_value)
        for degree, part in poly.homogeneous_components().items():
            parts.setdefault(degree, []).append((key, RatFun(part)))
    return {
        degree: DForm(omega_e.arity, parts[degree], omega_e.variables)
        for degree in sorted(parts)
    }


def jet_order(omega_e: DForm, point: Point) -> int:
    """Lowest degree of a nonzero homogeneous piece at the point."""
    if omega_e.is_zero:
        raise InvalidFoliation("Jet order of the zero form is undefined")
    return min(homogeneous_pieces(translate(omega_e, point)))


def has_jet2(omega_e: DForm, point: Point) -> bool:
    """Every coefficient and every first partial vanishes at the point."""
    values = {name: Fraction(point.get(name, 0)) for name in omega_e.variables}
    for _, coeff in omega_e.items():
        if not isinstance(coeff, RatFun):
            raise InvalidFoliation("Jet test of a cover-valued form")
        if coeff.evaluate(values):
            return False
    for _, coeff in omega_e.items():
        for name in omega_e.variables:
            if coeff.diff(name).evaluate(values):  # type: ignore[union-attr]
                return False
    return True
