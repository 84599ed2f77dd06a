"""Strict transform in the blow-up chart (tau, x) -> (x tau, x)."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from foliate.algebra.poly import Variables
from foliate.algebra.ratfun import RatFun
from foliate.exceptions import InexactBlowup
from foliate.foliation import radial_contraction
from foliate.forms import Check, DForm, RationalMap, pullback

from .cases import CaseTag, tag_for_pattern
from .expansion import AffineExpansion

LOG = logging.getLogger(__name__)

FIBER = "x"


def tau_names(n: int) -> Variables:
    """Base coordinates tau1..tau_{n-1} of the blow-up chart."""
    return tuple(f"tau{i}" for i in range(1, n))


def blowup_map(variables: Variables) -> RationalMap:
    """sigma: z_j -> x tau_j for all but the last coordinate, which goes to x."""
    taus = tau_names(len(variables))
    x = RatFun.var(FIBER)
    components = {name: x * RatFun.var(tau) for name, tau in zip(variables, taus)}
    components[variables[-1]] = x
    return RationalMap(components, taus + (FIBER,))


@dataclass(frozen=True)
class BlowupChartData:
    """theta_2..theta_5 and F_3..F_5 of the strict transform eta."""

    n: int
    tau: Variables
    theta: dict[int, DForm]
    f: dict[int, RatFun]

    @property
    def variables(self) -> Variables:
        """Chart coordinates (tau, x)."""
        return self.tau + (FIBER,)

    def theta_j(self, j: int) -> DForm:
        """theta_j, zero outside 2..5."""
        return self.theta.get(j, DForm.zero(1, self.tau))

    def f_j(self, j: int) -> RatFun:
        """F_j, zero outside 3..5."""
        return self.f.get(j, RatFun.constant(0))

    @property
    def eta(self) -> DForm:
        """Strict transform.

        eta = x theta_2 + x^2 theta_3 + x^3 theta_4 + x^4 theta_5
            + (F3 + x F4 + x^2 F5) dx
        """
        x = RatFun.var(FIBER)
        total = DForm.zero(1, self.variables)
        for j in range(2, 6):
            total = total + self.theta_j(j) * x ** (j - 1)
        dx_coeff = self.f_j(3) + x * self.f_j(4) + x * x * self.f_j(5)
        return total + DForm.one_form({FIBER: dx_coeff}, self.variables)

    @property
    def pattern(self) -> tuple[bool, bool, bool]:
        """Which of F3, F4, F5 are nonzero."""
        return (
            not self.f_j(3).is_zero,
            not self.f_j(4).is_zero,
            not self.f_j(5).is_zero,
        )


def _exact_part(form: DForm, power: int, degree: int) -> DForm:
    parts = form.split_powers(FIBER)
    if set(parts) - {power}:
        raise InexactBlowup(
            f"Pull-back of alpha_{degree} has x-powers {sorted(parts)}, "
            f"expected {power}",
            context={"degree": degree},
        )
    return parts.get(power, DForm.zero(1, form.variables))


def blowup_chart(expansion: AffineExpansion) -> BlowupChartData:
    """Blow up the expansion at the origin.

    theta_j and F_{j+1} are read off sigma^*(alpha_j) = x^{j+1} theta_j + x^j F_{j+1} dx
    after checking that the powers of x are exactly those.
    """
    sigma = blowup_map(expansion.variables)
    taus = tau_names(expansion.n)
    theta: dict[int, DForm] = {}
    f: dict[int, RatFun] = {}
    for degree in range(2, 6):
        pulled = pullback(sigma, expansion.piece(degree))
        base = _exact_part(pulled.drop(FIBER), degree + 1, degree)
        vertical = DForm.one_form({FIBER: pulled.coefficient(FIBER)}, pulled.variables)
        fiber = _exact_part(vertical, degree, degree)
        theta_j = DForm(1, base.components, taus)
        if theta_j.variables != taus:
            raise InexactBlowup(f"theta_{degree} depends on the fiber")
        if not theta_j.is_zero:
            theta[degree] = theta_j
        f_next = fiber.coefficient(FIBER)
        if degree == 5:
            if not f_next.is_zero:
                raise InexactBlowup(
                    "F6 does not vanish: the quintic piece is not radial-free",
                    context={"F6": str(f_next)},
                )
        elif not f_next.is_zero:
            f[degree + 1] = f_next  # type: ignore[assignment]
    data = BlowupChartData(expansion.n, taus, theta, f)
    LOG.info("Blow-up pattern (F3, F4, F5) nonzero = %s", data.pattern)
    return data


def case_tag(data: BlowupChartData) -> CaseTag:
    """Case tag from the exact vanishing of F3, F4, F5."""
    return tag_for_pattern(data.pattern)


def blowup_identities(expansion: AffineExpansion, data: BlowupChartData) -> list[Check]:
    """sigma^*(omega) = x^2 eta and i_R(omega)(x tau, x) = x^3 F3 + x^4 F4 + x^5 F5."""
    sigma = blowup_map(expansion.variables)
    x = RatFun.var(FIBER)
    omega = expansion.form
    strict = Check.equal(
        "sigma*omega = x^2 eta", pullback(sigma, omega), data.eta * x**2
    )
    radial = radial_contraction(omega).substitute(sigma.components)
    expected = x**3 * data.f_j(3) + x**4 * data.f_j(4) + x**5 * data.f_j(5)
    contraction = Check(
        "i_R(omega)(x tau, x) = x^3 F3 + x^4 F4 + x^5 F5",
        radial == expected,
        message="" if radial == expected else f"residual {radial - expected}",
    )
    return [strict, contraction]

