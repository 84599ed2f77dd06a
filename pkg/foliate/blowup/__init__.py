"""Blow-up of a degree four foliation at a point of jet order two."""

from .cases import CASE_TABLE, CaseTag, Outcome
from .chart import (
    FIBER,
    BlowupChartData,
    blowup_chart,
    blowup_identities,
    blowup_map,
    case_tag,
    tau_names,
)
from .expansion import AffineExpansion, expand_at_point

__all__ = [
    "CASE_TABLE",
    "FIBER",
    "AffineExpansion",
    "BlowupChartData",
    "CaseTag",
    "Outcome",
    "blowup_chart",
    "blowup_identities",
    "blowup_map",
    "case_tag",
    "expand_at_point",
    "tau_names",
]
