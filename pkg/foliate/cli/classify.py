"""Classification and certificate verification commands."""

import logging
from fractions import Fraction
from pathlib import Path

import click

from foliate.classifier import Case4Hints, classify, verify_certificate
from foliate.classifier.models import CertificateDocument
from foliate.config import DEFAULT_SETTINGS, Settings
from foliate.exceptions import FoliateError, FormSyntaxError, InvalidFoliation
from foliate.foliation import ChartPoint, Foliation
from foliate.io.certificate import (
    certificate_document,
    dump_certificate,
    emit_certificate,
)
from foliate.io.document import LoadedForm
from foliate.io.formtext import parse_coefficient

from .utils import (
    EXIT_FAILURE,
    CertificateFile,
    FormDocumentFile,
    PointType,
    RationalType,
    SettingsFile,
    fail,
)

LOG = logging.getLogger(__name__)


def _foliation(document: LoadedForm) -> Foliation:
    try:
        foliation = Foliation.from_form(document.form, variables=document.document.vars)
    except FoliateError as err:
        fail(err)
    declared = document.document.degree
    if declared is not None and declared != foliation.degree:
        fail(
            InvalidFoliation(
                f"Document declares degree {declared}, the form has degree "
                f"{foliation.degree}"
            )
        )
    return foliation


def _hints(
    foliation: Foliation, factor: str | None, exponent: Fraction
) -> Case4Hints | None:
    if factor is None:
        return None
    try:
        value = parse_coefficient(factor, foliation.variables)
    except FormSyntaxError as err:
        raise click.BadParameter(str(err), param_hint="--hint-factor") from err
    return Case4Hints(integrating_factor=value, exponent=exponent)


@click.command("classify")
@click.option("-p", "--point", type=PointType(), help="Comma separated rationals")
@click.option("-c", "--chart", type=click.INT, help="Affine chart z_chart = 1")
@click.option(
    "--hint-factor", help="Integrating factor of the quadratic piece for case 4"
)
@click.option(
    "--hint-exponent",
    type=RationalType(),
    default="1",
    show_default=True,
    help="Power the hint factor is raised to",
)
@click.option("-e", "--emit", type=click.Path(dir_okay=False), help="Certificate path")
@click.option("--config", type=SettingsFile(), help="Settings file")
@click.argument("document", type=FormDocumentFile())
def classify_cmd(
    document: LoadedForm,
    point: tuple[Fraction, ...] | None,
    chart: int | None,
    hint_factor: str | None,
    hint_exponent: Fraction,
    emit: str | None,
    config: Settings | None,
):
    """Classify a degree four foliation and write its certificate."""
    settings = config or DEFAULT_SETTINGS
    foliation = _foliation(document)
    where = document.point
    if point is not None:
        where = ChartPoint(chart or 0, point)
    elif where is not None and chart is not None:
        where = ChartPoint(chart, where.coordinates)
    hints = _hints(foliation, hint_factor, hint_exponent)
    try:
        if where is not None:
            where.as_mapping(foliation)
        certificate = classify(foliation, where, hints=hints, settings=settings)
    except ValueError as err:
        raise click.UsageError(str(err)) from err
    except FoliateError as err:
        fail(err)

    if emit is None:
        result = certificate_document(certificate)
        click.echo(dump_certificate(result), nl=False)
    else:
        result = emit_certificate(certificate, Path(emit))
        click.secho(
            f"Wrote {certificate.kind} certificate to {emit}", fg="green", err=True
        )
    if not result.transcript.passed:
        click.secho(
            f"Failed checks: {', '.join(result.transcript.failed)}", fg="red", err=True
        )
        raise SystemExit(EXIT_FAILURE)


@click.command("verify")
@click.option("--config", type=SettingsFile(), help="Settings file")
@click.argument("certificate", type=CertificateFile())
@click.argument("document", type=FormDocumentFile())
def verify_cmd(
    certificate: CertificateDocument, document: LoadedForm, config: Settings | None
):
    """Re-check every identity of a certificate against a foliation."""
    settings = config or DEFAULT_SETTINGS
    foliation = _foliation(document)
    report = verify_certificate(certificate.certificate, foliation, settings=settings)
    for check in report.checks:
        status = "ok" if check.passed else "FAILED"
        line = f"{status}\t{check.name}"
        if not check.passed and check.message:
            line = f"{line}\t{check.message}"
        click.echo(line)
    if report.passed != certificate.transcript.passed:
        LOG.warning(
            "Verification result %s differs from the recorded transcript %s",
            report.passed,
            certificate.transcript.passed,
        )
    if not report.passed:
        click.secho(f"{len(report.failed)} checks failed", fg="red", err=True)
        raise SystemExit(EXIT_FAILURE)
    click.secho(f"All {len(report.checks)} checks passed", fg="green", err=True)
