"""Case 2: F3 != 0, F4 = F5 = 0."""

from __future__ import annotations

import logging

from foliate.blowup import FIBER, AffineExpansion, BlowupChartData
from foliate.config import DEFAULT_SETTINGS, Settings
from foliate.transverse import fiber_expansion

from ..hints import Case4Hints
from ..models import Affine, FiniteGVS
from ..provenance import Trail
from ..registry import register_handler
from .common import finite_gvs, flip_to_affine, require_case

LOG = logging.getLogger(__name__)


@register_handler(2)
def handle_case2(
    chart: BlowupChartData,
    expansion: AffineExpansion | None = None,  # pylint: disable=unused-argument
    *,
    hints: Case4Hints | None = None,  # pylint: disable=unused-argument
    settings: Settings = DEFAULT_SETTINGS,
) -> Affine | FiniteGVS:
    """eta / F3 = dx + x beta1 + x^2 beta2 + x^3 beta3 + x^4 beta4."""
    require_case(chart, 2)
    trail = Trail(chart.eta)
    trail.scale(1 / chart.f_j(3))
    parts = fiber_expansion(trail.form, FIBER)
    if parts.top_power >= 3:
        LOG.info("beta3 or beta4 survives, classifying by the G-V-S")
        return finite_gvs(trail, FIBER, settings)
    return flip_to_affine(trail, FIBER, chart.tau, parts.beta(1), parts.beta(2))
