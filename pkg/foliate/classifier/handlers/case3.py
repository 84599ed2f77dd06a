"""Case 3: F5 != 0, F3 = F4 = 0."""

from __future__ import annotations

import logging

from foliate.algebra.ratfun import RatFun
from foliate.blowup import FIBER, AffineExpansion, BlowupChartData
from foliate.config import DEFAULT_SETTINGS, Settings
from foliate.exceptions import DerivedRelationFailed
from foliate.transverse import (
    StructuralBetas,
    fiber_expansion,
    riccati_triple,
    structural_system_check,
)

from ..hints import Case4Hints
from ..models import Affine, FiniteGVS, PureProjective
from ..provenance import Trail
from ..registry import register_handler
from .common import fresh, finite_gvs, from_triple, require_case

LOG = logging.getLogger(__name__)


@register_handler(3)
def handle_case3(
    chart: BlowupChartData,
    expansion: AffineExpansion | None = None,  # pylint: disable=unused-argument
    *,
    hints: Case4Hints | None = None,  # pylint: disable=unused-argument
    settings: Settings = DEFAULT_SETTINGS,
) -> Affine | PureProjective | FiniteGVS:
    """theta2 != 0 gives a cubic fiber form after x = 1/z, otherwise a Riccati form."""
    require_case(chart, 3)
    x = RatFun.var(FIBER)
    f5 = chart.f_j(5)
    trail = Trail(chart.eta)
    if not chart.theta_j(2).is_zero:
        # zeta = -z^3 psi^*(eta / (x F5)) with psi: x = 1/z
        z = fresh("z", chart.variables)
        big_z = RatFun.var(z)
        trail.scale(1 / (x * f5))
        trail.map({FIBER: 1 / big_z}, chart.tau + (z,))
        trail.scale(-(big_z**3))
        return finite_gvs(trail, z, settings)
    trail.scale(1 / (x * x * f5))
    parts = fiber_expansion(trail.form, FIBER)
    betas = StructuralBetas(parts.beta(0), parts.beta(1), parts.beta(2), FIBER)
    check = structural_system_check(betas)
    if not check:
        raise DerivedRelationFailed(
            f"Structural system fails: {check.message}", context={"check": check.name}
        )
    return from_triple(trail, riccati_triple(betas), [check])
