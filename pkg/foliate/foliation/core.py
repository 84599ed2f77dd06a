"""Homogeneous defining forms of foliations on projective space."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from foliate.algebra.poly import MPoly, Variables
from foliate.algebra.ratfun import RatFun
from foliate.exceptions import InvalidFoliation
from foliate.forms import Check, DForm, RationalMap, VField, pullback

from .chart import homogeneous_pieces

LOG = logging.getLogger(__name__)


def _polynomial_coefficients(omega: DForm) -> dict[str, MPoly]:
    if omega.arity != 1:
        raise InvalidFoliation(f"Expected a 1-form, got arity {omega.arity}")
    coefficients = {}
    for (name,), coeff in omega.items():
        if not isinstance(coeff, RatFun) or not coeff.is_polynomial:
            raise InvalidFoliation(
                f"Coefficient of d{name} is not a polynomial: {coeff}",
                context={"variable": name},
            )
        coefficients[name] = coeff.num.scale(1 / coeff.den.constant_value)
    return coefficients


def coefficient_gcd(omega: DForm) -> MPoly:
    """Gcd of the polynomial coefficients."""
    common = MPoly.zero()
    for coeff in _polynomial_coefficients(omega).values():
        common = common.gcd(coeff)
    return common


def saturate(omega: DForm) -> DForm:
    """Divide a polynomial 1-form by the gcd of its coefficients."""
    if omega.is_zero:
        raise InvalidFoliation("Cannot saturate the zero form")
    common = coefficient_gcd(omega)
    if common.is_constant:
        return omega
    LOG.debug("Removing common factor %s", common)
    return omega.map_coefficients(lambda c: RatFun(c.num.exquo(common)))


def is_saturated(omega: DForm) -> bool:
    """True when the coefficients have no common factor."""
    return coefficient_gcd(omega).is_constant


def coefficient_degrees(omega: DForm) -> set[int]:
    """Total degrees of the homogeneous pieces of all coefficients."""
    degrees: set[int] = set()
    for coeff in _polynomial_coefficients(omega).values():
        degrees.update(coeff.homogeneous_components())
    return degrees


def radial_contraction(omega: DForm) -> RatFun:
    """i_R(omega) for the Euler field on the form's variables."""
    value = omega.contract(VField.euler(omega.variables))
    if not isinstance(value, RatFun):
        raise InvalidFoliation("Radial contraction of a cover-valued form")
    return value


def check_integrable(omega: DForm) -> Check:
    """omega ^ d(omega) = 0, with the 3-form as witness on failure."""
    return Check.vanishes("omega^domega", omega.wedge(omega.d()))


def foliation_degree(omega: DForm) -> int:
    """Common coefficient degree minus one of a valid homogeneous form."""
    if omega.is_zero:
        raise InvalidFoliation("The zero form defines no foliation")
    degrees = coefficient_degrees(omega)
    if len(degrees) != 1:
        raise InvalidFoliation(
            f"Coefficients are not homogeneous of a common degree: {sorted(degrees)}",
            context={"invariant": "homogeneous"},
        )
    if not radial_contraction(omega).is_zero:
        raise InvalidFoliation(
            "The form does not vanish on the radial field",
            context={"invariant": "radial"},
        )
    if not is_saturated(omega):
        raise InvalidFoliation(
            f"The coefficients share the factor {coefficient_gcd(omega)}",
            context={"invariant": "saturated"},
        )
    return degrees.pop() - 1


@dataclass(frozen=True)
class Foliation:
    """A saturated integrable homogeneous 1-form on P^n.

    Only saturation is enforced for the singular set; its codimension is not
    computed.
    """

    n: int
    omega: DForm
    degree: int

    @classmethod
    def from_form(
        cls, omega: DForm, *, variables: Sequence[str] | None = None
    ) -> Foliation:
        """Validate a homogeneous form and compute its degree."""
        names = tuple(variables) if variables is not None else omega.variables
        omega = DForm(1, omega.components, names)
        if omega.variables != names:
            raise InvalidFoliation(
                f"Form uses variables outside {names}: {omega.variables}"
            )
        degree = foliation_degree(omega)
        integrable = check_integrable(omega)
        if not integrable:
            raise InvalidFoliation(
                "The form is not integrable",
                context={"invariant": "integrable", "witness": str(integrable.witness)},
            )
        LOG.info("Foliation of degree %d on P^%d", degree, len(names) - 1)
        return cls(len(names) - 1, omega, degree)

    @property
    def variables(self) -> Variables:
        """Homogeneous coordinates z_0..z_n."""
        return self.omega.variables

    def chart_variables(self, chart: int) -> Variables:
        """Affine coordinates of the chart z_chart = 1."""
        if not 0 <= chart <= self.n:
            raise ValueError(f"Chart {chart} outside 0..{self.n}")
        return tuple(v for i, v in enumerate(self.variables) if i != chart)


def affine_restrict(foliation: Foliation, chart: int) -> DForm:
    """Pull back along the chart inclusion z_chart = 1."""
    names = foliation.chart_variables(chart)
    inclusion = RationalMap({foliation.variables[chart]: 1}, names)
    return DForm(1, pullback(inclusion, foliation.omega).components, names)


def homogenize(omega_e: DForm, chart: int, variables: Sequence[str]) -> DForm:
    """Saturated homogeneous form on P^n restricting to omega_e in the chart.

    With m the top coefficient degree, A_j is homogenized to z_i^m A_j(z/z_i)
    and the form is sum_j A_j (z_i dz_j - z_j dz_i).
    """
    names = tuple(variables)
    hom = names[chart]
    coefficients = _polynomial_coefficients(omega_e)
    if not coefficients:
        raise InvalidFoliation("Cannot homogenize the zero form")
    top = max(max(c.homogeneous_components()) for c in coefficients.values())
    z_i = RatFun.var(hom)
    bindings = {v: RatFun.var(v) / z_i for v in names if v != hom}
    pairs = []
    for name, coeff in coefficients.items():
        lifted = coeff.substitute(bindings) * z_i**top
        pairs.append(((name,), lifted * z_i))
        pairs.append(((hom,), -lifted * RatFun.var(name)))
    return saturate(DForm(1, pairs, names))


def affine_degree(omega_e: DForm) -> int:
    """Degree of the foliation an affine polynomial form defines.

    The top piece counts for one degree less when it vanishes on the radial field.
    """
    pieces = homogeneous_pieces(omega_e)
    if not pieces:
        raise InvalidFoliation("The zero form defines no foliation")
    top = max(pieces)
    if radial_contraction(pieces[top]).is_zero:
        return top - 1
    return top
