"""Case 4: F3 = 0, F4 != 0.

The fiber form dz + beta0 + z beta1 + z^2 beta2 is brought to a Riccati form
dY - (Y^2 + u) beta0 once an integrating factor of theta2 is known.
"""

from __future__ import annotations

import logging

from foliate.algebra.ratfun import RatFun
from foliate.blowup import FIBER, AffineExpansion, BlowupChartData
from foliate.config import DEFAULT_SETTINGS, Settings
from foliate.exceptions import DerivedRelationFailed
from foliate.forms import Check, RationalMap, differential, pullback
from foliate.transverse import (
    AffineWitness,
    FiberExpansion,
    fiber_expansion,
    form_divide,
)

from ..darboux import find_integrating_factor
from ..hints import Case4Hints
from ..models import Affine, Case4NeedsData, FiniteGVS, RiccatiPullback
from ..provenance import Trail
from ..registry import register_handler
from ..riccati import BASE, FIBER as RICCATI_FIBER, rational_function_of, riccati_form
from .common import (
    affine_certificate,
    finite_gvs,
    flip_to_affine,
    fresh,
    records,
    require_case,
    same_form,
    trail_fields,
)

LOG = logging.getLogger(__name__)

Case4Certificate = Affine | FiniteGVS | RiccatiPullback | Case4NeedsData


def _fail(check: Check) -> None:
    if not check:
        raise DerivedRelationFailed(
            f"{check.name} fails: {check.message}", context={"relation": check.name}
        )


def _needs_data(
    trail: Trail, chart: BlowupChartData, parts: FiberExpansion, missing: str
) -> Case4NeedsData:
    LOG.warning("Case 4 stops: %s", missing)
    forms = {
        "theta2": str(chart.theta_j(2)),
        "beta0": str(parts.beta(0)),
        "beta1": str(parts.beta(1)),
        "beta2": str(parts.beta(2)),
        "eta": str(chart.eta),
    }
    return Case4NeedsData(forms=forms, missing=missing, **trail_fields(trail, []))


def _normal_form(chart: BlowupChartData) -> tuple[Trail, str, RatFun]:
    """Trail to dz + beta0 + ..., the fiber and beta0 / theta2."""
    f4, f5 = chart.f_j(4), chart.f_j(5)
    x = RatFun.var(FIBER)
    trail = Trail(chart.eta)
    if f5.is_zero:
        trail.scale(1 / (x * f4))
        return trail, FIBER, 1 / f4
    # x = (F4/F5) Z/(1 - Z) sends F4 + x F5 to F4/(1 - Z)
    z = fresh("z", chart.variables)
    big_z = RatFun.var(z)
    trail.scale(1 / x)
    trail.map({FIBER: f4 / f5 * big_z / (1 - big_z)}, chart.tau + (z,))
    trail.scale(f5 * (1 - big_z) ** 3 / (f4 * f4))
    return trail, z, f5 / (f4 * f4)


@register_handler(4)
def handle_case4(
    chart: BlowupChartData,
    expansion: AffineExpansion | None = None,
    *,
    hints: Case4Hints | None = None,
    settings: Settings = DEFAULT_SETTINGS,
) -> Case4Certificate:
    """Finite G-V-S, affine structure, Riccati pull-back or a request for data."""
    require_case(chart, 4)
    trail, fiber, ratio = _normal_form(chart)
    parts = fiber_expansion(trail.form, fiber)
    if parts.top_power >= 3:
        LOG.info("Cubic fiber term survives, classifying by the G-V-S")
        return finite_gvs(trail, fiber, settings)
    theta2 = chart.theta_j(2)
    if theta2.is_zero:
        return flip_to_affine(trail, fiber, chart.tau, parts.beta(1), parts.beta(2))

    hint = None
    if hints is not None and hints.integrating_factor is not None:
        if expansion is None:
            raise ValueError("An integrating factor hint needs the affine expansion")
        hint = hints.factor_in_chart(expansion.variables, chart.tau)
    search = find_integrating_factor(theta2, hint=hint, settings=settings)
    if search.factor is None:
        return _needs_data(
            trail,
            chart,
            parts,
            f"an integrating factor of theta2 ({search.tried} candidates tried)",
        )
    scale = search.factor * ratio
    checks = [Check.vanishes("d(theta2/f) = 0", (theta2 / search.factor).d())]

    # z -> F Z turns beta0 into the closed form theta2/f
    z = fresh("z", chart.tau)
    big_z = RatFun.var(z)
    trail.map({fiber: scale * big_z}, chart.tau + (z,))
    trail.scale(1 / scale)
    normal = fiber_expansion(trail.form, z)
    b0, b1, b2 = normal.beta(0), normal.beta(1), normal.beta(2)
    closed = Check.vanishes("db0 = 0", b0.d())
    _fail(closed)
    checks.append(closed)

    w = fresh("w", chart.tau)
    big_w = RatFun.var(w)
    trail.map({z: 1 / big_w}, chart.tau + (w,))
    trail.scale(-(big_w**2))
    eta_hat = trail.form

    g = form_divide(b1, b0)
    if g is None:
        raise DerivedRelationFailed("b1 is not proportional to b0")
    h = form_divide(b2 + differential(g, chart.tau) / 2, b0)
    if h is None:
        raise DerivedRelationFailed("b2 + dg/2 is not proportional to b0")
    u = h - g * g / 4
    du = differential(u, chart.tau)
    integrable = Check.vanishes("du^b0 = 0", du.wedge(b0))
    _fail(integrable)
    checks.append(integrable)
    y = big_w + g / 2
    riccati_normal = differential(y, trail.variables) - b0 * (y * y + u)

    if u.is_constant:
        quadric = y * y + u
        omega1 = -(differential(quadric, trail.variables) / quadric)
        LOG.info("u is constant, the Riccati form is transversely affine")
        checks.append(same_form("eta_hat = dY - Q b0", trail, riccati_normal))
        return affine_certificate(trail, AffineWitness(eta_hat, omega1), checks)

    lam = form_divide(b0, du)
    if lam is None:
        raise DerivedRelationFailed("b0 is not proportional to du")
    psi1 = rational_function_of(lam, u, settings.ansatz_max_degree)
    if psi1 is None:
        return _needs_data(
            trail,
            chart,
            normal,
            f"b0/du = {lam} as a rational function of u = {u} "
            f"of degree at most {settings.ansatz_max_degree}",
        )
    theta = riccati_form(psi1)
    phi = {BASE: u, RICCATI_FIBER: y}
    pulled = pullback(RationalMap(phi, trail.variables), theta)
    checks += [
        same_form("eta_hat = dY - (Y^2 + u) b0", trail, riccati_normal),
        Check.equal("eta_hat = phi^*theta", eta_hat, pulled),
    ]
    LOG.info("Riccati pull-back with psi1 = %s", psi1)
    return RiccatiPullback(
        omega0=str(eta_hat),
        phi={name: str(value) for name, value in phi.items()},
        theta=str(theta),
        psi1=str(psi1),
        checks=records(checks),
        **trail_fields(trail, [eta_hat]),
    )
