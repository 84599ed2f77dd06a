"""Commands that inspect a single form: invariants, degree, jet, blow-up, G-V-S."""

import logging
from fractions import Fraction

import click
import yaml

from foliate.blowup import CASE_TABLE, blowup_chart, case_tag, expand_at_point
from foliate.exceptions import FoliateError
from foliate.foliation import (
    ChartPoint,
    Foliation,
    affine_restrict,
    check_integrable,
    jet_order,
    radial_contraction,
    saturate,
)
from foliate.foliation.core import coefficient_degrees, coefficient_gcd
from foliate.forms import VField
from foliate.io.document import LoadedForm
from foliate.transverse import gvs_compute, gvs_verify

from .utils import EXIT_FAILURE, FormDocumentFile, PointType, fail

LOG = logging.getLogger(__name__)


def _dump(data: dict) -> None:
    text = yaml.safe_dump(data, sort_keys=False, default_flow_style=False)
    click.echo(text, nl=False)


def _foliation(document: LoadedForm) -> Foliation:
    try:
        return Foliation.from_form(document.form, variables=document.document.vars)
    except FoliateError as err:
        fail(err)


def _point(
    document: LoadedForm, point: tuple[Fraction, ...] | None, chart: int | None
) -> ChartPoint:
    if point is not None:
        return ChartPoint(chart or 0, point)
    if document.point is not None:
        if chart is None:
            return document.point
        return ChartPoint(chart, document.point.coordinates)
    raise click.UsageError("A point is needed, give --point or put one in the document")


@click.command("check")
@click.argument("document", type=FormDocumentFile())
def check_form(document: LoadedForm):
    """Report integrability, radial contraction and saturation of a form."""
    omega = document.form
    integrable = check_integrable(omega)
    report: dict[str, object] = {"integrable": integrable.passed}
    if not integrable:
        report["witness"] = str(integrable.witness)
    try:
        radial = radial_contraction(omega)
        report["radial_contraction"] = str(radial)
        common = coefficient_gcd(omega)
        report["common_factor"] = str(common)
        report["degrees"] = sorted(coefficient_degrees(omega))
    except FoliateError as err:
        report["error"] = str(err)
        radial, common = None, None
    _dump(report)
    passed = (
        integrable.passed
        and radial is not None
        and radial.is_zero
        and common is not None
        and common.is_constant
    )
    if not passed:
        raise SystemExit(EXIT_FAILURE)


@click.command("degree")
@click.argument("document", type=FormDocumentFile())
def degree(document: LoadedForm):
    """Degree of the foliation, after removing a common factor."""
    try:
        omega = saturate(document.form)
        foliation = Foliation.from_form(omega, variables=document.document.vars)
    except FoliateError as err:
        fail(err)
    if omega != document.form:
        LOG.info("Saturated the form to %s", omega)
    click.echo(foliation.degree)


@click.command("jet")
@click.option("-p", "--point", type=PointType(), help="Comma separated rationals")
@click.option("-c", "--chart", type=click.INT, help="Affine chart z_chart = 1")
@click.argument("document", type=FormDocumentFile())
def jet(document: LoadedForm, point: tuple[Fraction, ...] | None, chart: int | None):
    """Jet order of the foliation at a point."""
    foliation = _foliation(document)
    where = _point(document, point, chart)
    try:
        omega_e = affine_restrict(foliation, where.chart)
        order = jet_order(omega_e, where.as_mapping(foliation))
    except ValueError as err:
        raise click.UsageError(str(err)) from err
    except FoliateError as err:
        fail(err)
    click.echo(order)


@click.command("blowup")
@click.option("-p", "--point", type=PointType(), help="Comma separated rationals")
@click.option("-c", "--chart", type=click.INT, help="Affine chart z_chart = 1")
@click.argument("document", type=FormDocumentFile())
def blowup(
    document: LoadedForm, point: tuple[Fraction, ...] | None, chart: int | None
):
    """Blow up at a point of jet order two and print the chart data."""
    foliation = _foliation(document)
    where = _point(document, point, chart)
    try:
        data = blowup_chart(expand_at_point(foliation, where))
    except FoliateError as err:
        fail(err)
    tag = case_tag(data)
    _dump(
        {
            "case": tag.case,
            "pattern": list(tag.pattern),
            "variables": list(data.variables),
            "theta": {j: str(data.theta_j(j)) for j in range(2, 6)},
            "F": {j: str(data.f_j(j)) for j in range(3, 6)},
            "eta": str(data.eta),
        }
    )


@click.command("gvs")
@click.option("-f", "--field", required=True, help="Variable v of the field d/dv")
@click.option("--cap", type=click.IntRange(min=1), default=8, show_default=True)
@click.argument("document", type=FormDocumentFile())
def gvs(document: LoadedForm, field: str, cap: int):
    """Godbillon-Vey sequence of the form along a coordinate field."""
    omega = document.form
    if field not in omega.variables:
        raise click.UsageError(f"{field} is not a declared variable")
    try:
        sequence = gvs_compute(omega, VField.coordinate(field, omega.variables), cap)
    except FoliateError as err:
        fail(err)
    check = gvs_verify(sequence)
    _dump(
        {
            "field": field,
            "finite": sequence.finite,
            "length": sequence.length,
            "forms": [str(form) for form in sequence.forms],
            "Omega^dOmega": check.passed,
        }
    )
    if not (sequence.finite and check.passed):
        raise SystemExit(EXIT_FAILURE)


@click.command("cases")
def cases():
    """Print the case table: vanishing pattern and possible outcomes."""
    for case, (pattern, outcomes) in CASE_TABLE.items():
        click.echo(f"Case{case}\t{pattern}\t{', '.join(outcomes)}")
