"""Classification of a degree four foliation from one point of jet order two."""

from __future__ import annotations

import logging
from fractions import Fraction

from foliate.blowup import (
    AffineExpansion,
    blowup_chart,
    blowup_identities,
    case_tag,
    expand_at_point,
)
from foliate.blowup.expansion import TARGET_DEGREE
from foliate.config import DEFAULT_SETTINGS, Settings
from foliate.exceptions import (
    DegreeMismatch,
    FoliateError,
    InexactBlowup,
    InvalidFoliation,
)
from foliate.foliation import (
    ChartPoint,
    Foliation,
    affine_restrict,
    find_jet2_witness,
    has_jet2,
)

from . import handlers  # noqa: F401  pylint: disable=unused-import
from .handlers import linear_target
from .handlers.common import records
from .hints import Case4Hints
from .models import Certificate, FirstIntegralConditional, LinearPullback, Origin
from .registry import get_handler

LOG = logging.getLogger(__name__)

MIN_DIMENSION = 3


def point_label(point: ChartPoint) -> str:
    """chart:coords, the form scanned points are stored in."""
    return f"{point.chart}:" + ",".join(str(c) for c in point.coordinates)


def parse_point_label(label: str) -> ChartPoint:
    """Inverse of point_label."""
    chart, _, coords = label.partition(":")
    if not coords:
        raise ValueError(f"Point label {label!r} is not of the form chart:coords")
    return ChartPoint(int(chart), tuple(Fraction(c) for c in coords.split(",")))


def _check_input(foliation: Foliation) -> None:
    if foliation.n < MIN_DIMENSION:
        raise InvalidFoliation(
            f"Classification needs n >= {MIN_DIMENSION}, got P^{foliation.n}",
            context={"n": foliation.n},
        )
    if foliation.degree != TARGET_DEGREE:
        raise DegreeMismatch(
            f"Expected a foliation of degree {TARGET_DEGREE}, got {foliation.degree}",
            context={"degree": foliation.degree},
        )


def select_witness(
    foliation: Foliation,
    point: ChartPoint | None = None,
    *,
    settings: Settings = DEFAULT_SETTINGS,
) -> tuple[ChartPoint | None, list[ChartPoint]]:
    """The given point when it has jet order two, otherwise the first scanned one."""
    if point is not None:
        omega_e = affine_restrict(foliation, point.chart)
        if has_jet2(omega_e, point.as_mapping(foliation)):
            return point, [point]
        LOG.warning("Jet order at %s is below two, scanning for a witness", point)
    scan = find_jet2_witness(foliation, settings=settings)
    scanned = ([point] if point is not None else []) + scan.scanned
    return scan.witness, scanned


def classify(
    foliation: Foliation,
    point: ChartPoint | None = None,
    *,
    hints: Case4Hints | None = None,
    settings: Settings = DEFAULT_SETTINGS,
    depth: int = 0,
) -> Certificate:
    """Blow up at a point of jet order two and run the handler of its case.

    A linear pull-back onto a degree four foliation of P^{n-1} with n - 1 >= 3
    is classified in turn and attached as the target.
    """
    _check_input(foliation)
    witness, scanned = select_witness(foliation, point, settings=settings)
    if witness is None:
        LOG.info("No witness, the first integral conclusion is conditional")
        return FirstIntegralConditional(scanned=[point_label(p) for p in scanned])

    expansion = expand_at_point(foliation, witness)
    chart = blowup_chart(expansion)
    tag = case_tag(chart)
    LOG.info("Blow-up at %s falls in %s", witness, tag)
    identities = blowup_identities(expansion, chart)
    for check in identities:
        if not check:
            raise InexactBlowup(f"{check.name} fails: {check.message}")

    handler = get_handler(tag.case)
    certificate = handler(chart, expansion, hints=hints, settings=settings)
    origin = Origin(
        n=foliation.n,
        chart=witness.chart,
        point=[str(c) for c in witness.coordinates],
        case=tag.case,
        variables=list(chart.variables),
        eta=str(chart.eta),
    )
    checks = records(identities) + certificate.checks
    update: dict = {"origin": origin, "checks": checks}
    if isinstance(certificate, LinearPullback):
        update["target"] = _classify_target(certificate, expansion, settings, depth)
    return certificate.model_copy(update=update)


def _classify_target(
    certificate: LinearPullback,
    expansion: AffineExpansion,
    settings: Settings,
    depth: int,
) -> Certificate | None:
    if certificate.target_degree != TARGET_DEGREE:
        LOG.info("Target has degree %d, no recursion", certificate.target_degree)
        return None
    if len(certificate.target_variables) - 1 < MIN_DIMENSION:
        LOG.info("Target lives on P^2, stopping")
        return None
    if depth + 1 > settings.max_recursion_depth:
        LOG.warning("Recursion depth %d reached", settings.max_recursion_depth)
        return None
    target = linear_target(expansion)
    LOG.info("Classifying the target foliation on P^%d", target.n)
    try:
        return classify(target, settings=settings, depth=depth + 1)
    except FoliateError as exc:
        LOG.warning("Target foliation could not be classified: %s", exc)
        return None
