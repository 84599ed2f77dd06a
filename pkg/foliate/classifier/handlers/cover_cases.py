"""Cases 5, 6 and 7: two of F3, F4, F5 nonzero or all three.

Each chart is rewritten along a chain of fiber changes and a branched double
cover until the vertical coefficient is one. When the chain ends in
dT + beta0 + T beta1 + T^2 beta2 with T-free betas, the beta system gives the
transverse structure. Otherwise eta is tried for a logarithmic affine
structure and the G-V-S along T decides last.
"""

from __future__ import annotations

import logging

from foliate.algebra.poly import MPoly
from foliate.algebra.quadratic import QuadCoverRing
from foliate.algebra.ratfun import RatFun
from foliate.blowup import FIBER, AffineExpansion, BlowupChartData, blowup_map
from foliate.config import DEFAULT_SETTINGS, Settings
from foliate.exceptions import DerivedRelationFailed
from foliate.forms import descend
from foliate.transverse import (
    StructuralBetas,
    fiber_expansion,
    riccati_triple,
    structural_system_check,
)

from ..darboux import coefficient_factors, logarithmic_witness
from ..hints import Case4Hints
from ..models import Affine, FiniteGVS, PureProjective
from ..provenance import Trail
from ..registry import register_handler
from .common import (
    affine_certificate,
    finish_by_gvs,
    fresh,
    from_triple,
    require_case,
    unit_vertical,
)

LOG = logging.getLogger(__name__)

CoverCertificate = Affine | PureProjective | FiniteGVS


def _unit_ratio(
    trail: Trail, fiber: str, new: str, source: tuple[str, ...], c: RatFun
) -> RatFun:
    """fiber = c T/(1 - T); returns T."""
    big_t = RatFun.var(new)
    trail.map({fiber: c * big_t / (1 - big_t)}, source + (new,))
    return big_t


def riccati_end(trail: Trail, fiber: str) -> Affine | PureProjective | None:
    """Structure of a chain ending in a Riccati form, None for any other end."""
    unit_vertical(trail, fiber)
    try:
        parts = fiber_expansion(descend(trail.form), fiber)
    except ValueError as exc:
        LOG.info("Chain end is not polynomial over the base: %s", exc)
        return None
    if parts.top_power > 2 or set(parts.vertical) != {0}:
        LOG.info("Chain end has degree %d in %s", parts.top_power, fiber)
        return None
    betas = StructuralBetas(parts.beta(0), parts.beta(1), parts.beta(2), fiber)
    check = structural_system_check(betas)
    if not check:
        raise DerivedRelationFailed(
            f"Structural system fails: {check.message}", context={"check": check.name}
        )
    return from_triple(trail, riccati_triple(betas), [check])


def candidate_factors(
    chart: BlowupChartData, expansion: AffineExpansion | None
) -> list[MPoly]:
    """Factors of the eta coefficients and the blown up affine coefficients."""
    found = {str(f): f for f in coefficient_factors(chart.eta)}
    if expansion is not None:
        sigma = blowup_map(expansion.variables)
        for factor in coefficient_factors(expansion.form):
            pulled = RatFun(factor).substitute(sigma.components)
            for piece, _ in pulled.num.factor()[1]:
                found.setdefault(str(piece), piece)
    return sorted(found.values(), key=lambda p: (p.total_degree, str(p)))


def _finish(
    chart: BlowupChartData,
    expansion: AffineExpansion | None,
    trail: Trail,
    fiber: str,
    settings: Settings,
) -> CoverCertificate:
    certificate = riccati_end(trail, fiber)
    if certificate is not None:
        return certificate
    witness = logarithmic_witness(chart.eta, candidate_factors(chart, expansion))
    if witness is not None:
        return affine_certificate(Trail(chart.eta), witness, [])
    return finish_by_gvs(trail, fiber, settings)


def vertical_to_unit(
    trail: Trail, z: str, t: str, tau: tuple[str, ...], rest: RatFun, top: RatFun
) -> RatFun:
    """z = (rest/top) T/(1 - T) and the scale (1 - T)^3 top/rest^2.

    (rest + z top) dz becomes dT. The base part b0 + z b1 + z^2 b2 becomes
    g0 + T g1 + T^2 g2 + T^3 g3 with P0 = top b0/rest^2, P1 = b1/rest,
    P2 = b2/top, E = d rest/rest - d top/top and
    g0 = P0, g1 = -3 P0 + P1 + E, g2 = 3 P0 - 2 P1 + P2 - E, g3 = -P0 + P1 - P2.
    """
    big_t = _unit_ratio(trail, z, t, tau, rest / top)
    trail.scale((1 - big_t) ** 3 * top / (rest * rest))
    return big_t


def half_cover(
    trail: Trail, chart: BlowupChartData, fiber: str, rest: RatFun, top: RatFun
) -> str:
    """Cover fiber^2 = z, then bring (rest + z top) dz to dT; returns T."""
    used = chart.variables + (fiber,)
    z, t = fresh("z", used), fresh("t", used)
    ring = QuadCoverRing(fiber, RatFun.var(z), chart.tau)
    trail.cover(ring, z)
    trail.scale(ring.gen * 2)
    vertical_to_unit(trail, z, t, chart.tau, rest, top)
    LOG.info("Lifted to the cover %s", trail.ring)
    return t


def case5_middle(chart: BlowupChartData) -> tuple[Trail, str]:
    """x = 1/z, z = (F4/F3) t/(1 - t): the form sum t^i beta_i - t dt.

    With A = F3^2 theta5/F4^3, B = F3 theta4/F4^2, C = theta3/F4,
    D = theta2/F3 and E = dF4/F4 - dF3/F3:
    beta0 = A, beta1 = -4A + B, beta2 = 6A - 3B + C - E,
    beta3 = -4A + 3B - 2C + D + E, beta4 = A - B + C - D.
    """
    f3, f4 = chart.f_j(3), chart.f_j(4)
    z, t = fresh("z", chart.variables), fresh("t", chart.variables)
    trail = Trail(chart.eta)
    big_z = RatFun.var(z)
    trail.map({FIBER: 1 / big_z}, chart.tau + (z,))
    trail.scale(big_z**4)
    big_t = _unit_ratio(trail, z, t, chart.tau, f4 / f3)
    trail.scale((1 - big_t) ** 4 * f3 * f3 / f4**3)
    return trail, t


def complete_square(chart: BlowupChartData) -> tuple[Trail, str, RatFun]:
    """y = x + F4/(2 F5); returns the trail, y and A = F3 - F4^2/(4 F5).

    F3 + x F4 + x^2 F5 becomes A + y^2 F5.
    """
    f3, f4, f5 = chart.f_j(3), chart.f_j(4), chart.f_j(5)
    y = fresh("y", chart.variables)
    trail = Trail(chart.eta)
    trail.map({FIBER: RatFun.var(y) - f4 / (f5 * 2)}, chart.tau + (y,))
    return trail, y, f3 - f4 * f4 / (f5 * 4)


@register_handler(5)
def handle_case5(
    chart: BlowupChartData,
    expansion: AffineExpansion | None = None,
    *,
    hints: Case4Hints | None = None,  # pylint: disable=unused-argument
    settings: Settings = DEFAULT_SETTINGS,
) -> CoverCertificate:
    """F5 = 0: x = 1/z, z = (F4/F3) t/(1 - t), then the cover t^2 = -2s.

    The middle form is sum t^i beta_i - t dt with i up to four, and -t dt = ds.
    """
    require_case(chart, 5)
    trail, t = case5_middle(chart)
    s = fresh("s", trail.variables)
    ring = QuadCoverRing(t, RatFun.var(s) * -2, chart.tau)
    trail.cover(ring, s)
    LOG.info("Case 5 lifted to the cover %s", ring)
    return _finish(chart, expansion, trail, s, settings)


@register_handler(6)
def handle_case6(
    chart: BlowupChartData,
    expansion: AffineExpansion | None = None,
    *,
    hints: Case4Hints | None = None,  # pylint: disable=unused-argument
    settings: Settings = DEFAULT_SETTINGS,
) -> CoverCertificate:
    """F4 = 0: x^2 = z turns (F3 + x^2 F5) dx into (F3 + z F5) dz / (2x)."""
    require_case(chart, 6)
    trail = Trail(chart.eta)
    t = half_cover(trail, chart, FIBER, chart.f_j(3), chart.f_j(5))
    return _finish(chart, expansion, trail, t, settings)


@register_handler(7)
def handle_case7(
    chart: BlowupChartData,
    expansion: AffineExpansion | None = None,
    *,
    hints: Case4Hints | None = None,  # pylint: disable=unused-argument
    settings: Settings = DEFAULT_SETTINGS,
) -> CoverCertificate:
    """All F_j nonzero: F3 + x F4 + x^2 F5 = A + y^2 F5 with y = x + F4/(2 F5).

    The shift takes the F4 term into the fiber, then Case 6 runs with A for F3.
    """
    require_case(chart, 7)
    f5 = chart.f_j(5)
    trail, y, rest = complete_square(chart)
    if rest.is_zero:
        # F5 y^2 dy, a pole of order two at y = infinity
        w = fresh("w", trail.variables)
        big_w = RatFun.var(w)
        trail.map({y: 1 / big_w}, chart.tau + (w,))
        trail.scale(-(big_w**4) / f5)
        LOG.info("Case 7 with a perfect square")
        return _finish(chart, expansion, trail, w, settings)
    t = half_cover(trail, chart, y, rest, f5)
    return _finish(chart, expansion, trail, t, settings)
