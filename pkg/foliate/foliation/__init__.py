"""Foliations on projective space and their affine charts."""

from .chart import has_jet2, homogeneous_pieces, jet_order, translate
from .core import (
    Foliation,
    affine_degree,
    affine_restrict,
    check_integrable,
    foliation_degree,
    homogenize,
    radial_contraction,
    saturate,
)
from .witness import ChartPoint, WitnessScan, find_jet2_witness

__all__ = [
    "ChartPoint",
    "Foliation",
    "WitnessScan",
    "affine_degree",
    "affine_restrict",
    "check_integrable",
    "find_jet2_witness",
    "foliation_degree",
    "has_jet2",
    "homogeneous_pieces",
    "homogenize",
    "jet_order",
    "radial_contraction",
    "saturate",
    "translate",
]
