"""Shared utility and click input types."""

from fractions import Fraction
from typing import Any, NoReturn

import click

from foliate.classifier.models import CertificateDocument
from foliate.config import Settings, read_settings
from foliate.exceptions import CertificateFormatError, FoliateError, FormSyntaxError
from foliate.io.certificate import read_certificate
from foliate.io.document import LoadedForm, read_form_document
from foliate.io.formtext import parse_point

EXIT_FAILURE = 1


class FormDocumentFile(click.ParamType):
    """CLI argument for form documents."""

    name = "form"

    def convert(self, value: Any, param: Any, ctx: Any) -> LoadedForm:
        """Read and parse the document."""
        if isinstance(value, LoadedForm):
            return value
        try:
            return read_form_document(value)
        except (FileNotFoundError, FormSyntaxError) as err:
            self.fail(str(err), param, ctx)


class CertificateFile(click.ParamType):
    """CLI argument for certificate documents."""

    name = "certificate"

    def convert(self, value: Any, param: Any, ctx: Any) -> CertificateDocument:
        """Read and validate the certificate."""
        if isinstance(value, CertificateDocument):
            return value
        try:
            return read_certificate(value)
        except (FileNotFoundError, CertificateFormatError) as err:
            self.fail(str(err), param, ctx)


class SettingsFile(click.ParamType):
    """CLI option for settings files."""

    name = "config"

    def convert(self, value: Any, param: Any, ctx: Any) -> Settings:
        """Convert string path to a settings object."""
        if isinstance(value, Settings):
            return value
        try:
            return read_settings(value)
        except (FileNotFoundError, ValueError) as err:
            self.fail(str(err), param, ctx)


class PointType(click.ParamType):
    """Comma separated rationals."""

    name = "point"

    def convert(self, value: Any, param: Any, ctx: Any) -> tuple[Fraction, ...]:
        """Parse the coordinates."""
        if isinstance(value, tuple):
            return value
        try:
            return parse_point(value)
        except (ValueError, ZeroDivisionError, FormSyntaxError) as err:
            self.fail(f"{value!r} is not a list of rationals: {err}", param, ctx)


class RationalType(click.ParamType):
    """A rational number such as 3 or -1/2."""

    name = "rational"

    def convert(self, value: Any, param: Any, ctx: Any) -> Fraction:
        """Parse the number."""
        if isinstance(value, Fraction):
            return value
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as err:
            self.fail(f"{value!r} is not a rational: {err}", param, ctx)


def fail(err: FoliateError) -> NoReturn:
    """Report a mathematical failure and exit with status 1."""
    click.secho(f"{type(err).__name__}: {err}", fg="red", err=True)
    raise SystemExit(EXIT_FAILURE)
