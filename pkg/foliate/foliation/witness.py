"""Bounded search for a point of jet order at least two."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

from foliate.config import DEFAULT_SETTINGS, Settings

from .chart import has_jet2
from .core import Foliation, affine_restrict

LOG = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChartPoint:
    """A rational point given in the affine coordinates of one chart."""

    chart: int
    coordinates: tuple[Fraction, ...]

    def as_mapping(self, foliation: Foliation) -> dict[str, Fraction]:
        """Coordinates keyed by the chart variable names."""
        names = foliation.chart_variables(self.chart)
        if len(names) != len(self.coordinates):
            raise ValueError(
                f"Point {self} needs {len(names)} coordinates in chart {self.chart}"
            )
        return dict(zip(names, self.coordinates))

    def __str__(self) -> str:
        coords = ",".join(str(c) for c in self.coordinates)
        return f"chart {self.chart} ({coords})"


@dataclass
class WitnessScan:
    """Result of a witness search with the points that were tried."""

    witness: ChartPoint | None
    scanned: list[ChartPoint] = field(default_factory=list)


def _scan_order(
    foliation: Foliation, candidates: Iterable[ChartPoint], grid: list[Fraction]
) -> Iterator[ChartPoint]:
    for chart in range(foliation.n + 1):
        yield ChartPoint(chart, (Fraction(0),) * foliation.n)
    yield from candidates
    for coords in itertools.product(grid, repeat=foliation.n):
        yield ChartPoint(0, tuple(coords))


def find_jet2_witness(
    foliation: Foliation,
    candidates: Iterable[ChartPoint] = (),
    *,
    settings: Settings = DEFAULT_SETTINGS,
) -> WitnessScan:
    """First scanned point with jet order >= 2.

    Coordinate points come first, then the candidates, then a grid in chart 0.
    Not finding a point does not show that the jet order is at most one
    everywhere.
    """
    charts = {}
    scan = WitnessScan(None)
    for point in _scan_order(foliation, candidates, settings.grid):
        if point.chart not in charts:
            charts[point.chart] = affine_restrict(foliation, point.chart)
        scan.scanned.append(point)
        if has_jet2(charts[point.chart], point.as_mapping(foliation)):
            LOG.info("Found jet order two point at %s", point)
            scan.witness = point
            return scan
        LOG.debug("Rejected %s", point)
    LOG.info("No jet order two point among %d scanned points", len(scan.scanned))
    return scan
