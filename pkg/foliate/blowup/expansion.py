"""Expansion of a degree four foliation at a point of jet order two."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from foliate.algebra.poly import Variables
from foliate.exceptions import DegreeMismatch, InvalidFoliation, JetTooLow
from foliate.foliation import (
    ChartPoint,
    Foliation,
    affine_restrict,
    homogeneous_pieces,
    radial_contraction,
    translate,
)
from foliate.forms import DForm

LOG = logging.getLogger(__name__)

TARGET_DEGREE = 4


@dataclass(frozen=True)
class AffineExpansion:
    """Homogeneous pieces alpha_j of the chart form centred at a point."""

    n: int
    chart: int
    point: tuple[Fraction, ...]
    variables: Variables
    pieces: dict[int, DForm]

    def piece(self, degree: int) -> DForm:
        """alpha_degree, zero when absent."""
        return self.pieces.get(degree, DForm.zero(1, self.variables))

    @property
    def form(self) -> DForm:
        """Sum of all pieces."""
        total = DForm.zero(1, self.variables)
        for piece in self.pieces.values():
            total = total + piece
        return total

    @property
    def chart_point(self) -> ChartPoint:
        """The expansion point."""
        return ChartPoint(self.chart, self.point)


def expand_at_point(foliation: Foliation, point: ChartPoint) -> AffineExpansion:
    """Translate the chart form to the point and split it into pieces."""
    if foliation.degree != TARGET_DEGREE:
        raise DegreeMismatch(
            f"Expected a foliation of degree {TARGET_DEGREE}, got {foliation.degree}",
            context={"degree": foliation.degree},
        )
    omega_e = affine_restrict(foliation, point.chart)
    shifted = translate(omega_e, point.as_mapping(foliation))
    names = foliation.chart_variables(point.chart)
    pieces = homogeneous_pieces(DForm(1, shifted.components, names))
    jet = min(pieces)
    if jet < 2:
        raise JetTooLow(
            f"Jet order at {point} is {jet}", context={"jet": jet, "point": str(point)}
        )
    if max(pieces) > TARGET_DEGREE + 1:
        raise InvalidFoliation(f"Chart form has a piece of degree {max(pieces)}")
    top = pieces.get(TARGET_DEGREE + 1)
    if top is not None and not radial_contraction(top).is_zero:
        raise InvalidFoliation("The quintic piece does not vanish on the radial field")
    LOG.info("Expansion at %s has pieces %s", point, sorted(pieces))
    return AffineExpansion(foliation.n, point.chart, point.coordinates, names, pieces)
