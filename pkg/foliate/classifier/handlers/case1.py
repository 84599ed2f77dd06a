"""Case 1: F3 = F4 = F5 = 0, the foliation is a cone over P^{n-1}."""

from __future__ import annotations

import logging

from foliate.blowup import AffineExpansion, BlowupChartData
from foliate.config import DEFAULT_SETTINGS, Settings
from foliate.exceptions import InconsistentCase1
from foliate.foliation import Foliation, radial_contraction, saturate
from foliate.forms import Check

from ..hints import Case4Hints
from ..models import LinearPullback
from ..registry import register_handler
from .common import records, require_case

LOG = logging.getLogger(__name__)


def linear_target(expansion: AffineExpansion) -> Foliation:
    """The foliation of P^{n-1} defined by the saturated quintic piece."""
    alpha5 = expansion.piece(5)
    if alpha5.is_zero:
        raise InconsistentCase1("alpha_5 vanishes, the foliation is not of degree four")
    return Foliation.from_form(saturate(alpha5), variables=expansion.variables)


@register_handler(1)
def handle_case1(
    chart: BlowupChartData,
    expansion: AffineExpansion | None = None,
    *,
    hints: Case4Hints | None = None,  # pylint: disable=unused-argument
    settings: Settings = DEFAULT_SETTINGS,  # pylint: disable=unused-argument
) -> LinearPullback:
    """omega = alpha_5; the lower pieces must vanish."""
    require_case(chart, 1)
    if expansion is None:
        raise ValueError("Case 1 needs the affine expansion")
    checks = []
    for degree in (2, 3, 4):
        check = Check.vanishes(f"alpha_{degree} = 0", expansion.piece(degree))
        if not check:
            raise InconsistentCase1(
                f"alpha_{degree} survives although F3 = F4 = F5 = 0",
                context={"degree": degree, "alpha": str(expansion.piece(degree))},
            )
        checks.append(check)
    alpha5 = expansion.piece(5)
    radial = radial_contraction(alpha5)
    message = "" if radial.is_zero else f"residual {radial}"
    checks.append(Check("i_R(alpha_5) = 0", radial.is_zero, message=message))
    target = linear_target(expansion)
    LOG.info(
        "Linear pull-back of a degree %d foliation on P^%d", target.degree, target.n
    )
    return LinearPullback(
        alpha5=str(target.omega),
        target_variables=list(target.variables),
        target_degree=target.degree,
        variables=list(chart.variables),
        checks=records(checks),
    )
