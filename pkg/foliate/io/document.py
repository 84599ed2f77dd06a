"""Form documents: a YAML mapping with the declared variables and a 1-form.

    vars: z0 z1 z2 z3
    form: z1 dz0 - z0 dz1
    degree: 4          # optional
    chart: 0           # optional
    point: 0,0,0       # optional, rationals in the chart coordinates
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import yaml
from pydantic import BaseModel, ConfigDict, ValidationError, field_validator

from foliate.exceptions import FormSyntaxError, InvalidFoliation
from foliate.foliation import ChartPoint, Foliation
from foliate.forms import DForm

from .formtext import check_declarations, parse_form, parse_point
from .types import StreamOrPath
from .utils import read_text

LOG = logging.getLogger(__name__)


class FormDocument(BaseModel):  # pylint: disable=too-few-public-methods
    """Keys of a form document."""

    model_config = ConfigDict(extra="forbid")

    vars: list[str]
    form: str
    degree: int | None = None
    chart: int | None = None
    point: str | None = None

    @field_validator("vars", mode="before")
    @classmethod
    def split_names(cls, value: object) -> object:
        """Variables are given as one space separated string."""
        if isinstance(value, str):
            return value.split()
        return value

    @field_validator("form", "point", mode="before")
    @classmethod
    def as_text(cls, value: object) -> object:
        """A bare number in YAML is still form text."""
        if isinstance(value, (int, float)):
            return str(value)
        return value


@dataclass(frozen=True)
class LoadedForm:
    """A parsed document with its form."""

    document: FormDocument
    form: DForm

    @property
    def point(self) -> ChartPoint | None:
        """The optional point, in chart 0 unless a chart is given."""
        if self.document.point is None:
            return None
        return ChartPoint(self.document.chart or 0, parse_point(self.document.point))


def _form_position(text: str) -> tuple[int, int]:
    """Line and column where the value of ``form`` starts."""
    root = yaml.compose(text)
    if not isinstance(root, yaml.MappingNode):
        return 1, 1
    for key, value in root.value:
        if getattr(key, "value", None) != "form":
            continue
        mark = value.start_mark
        if getattr(value, "style", None) in ("|", ">"):
            lines = text.splitlines()
            body = lines[mark.line + 1] if mark.line + 1 < len(lines) else ""
            return mark.line + 2, len(body) - len(body.lstrip()) + 1
        quoted = 1 if getattr(value, "style", None) in ("'", '"') else 0
        return mark.line + 1, mark.column + 1 + quoted
    return 1, 1


def parse_form_document(text: str) -> LoadedForm:
    """Validate the keys and parse the form with document positions."""
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        line = mark.line + 1 if mark is not None else 1
        column = mark.column + 1 if mark is not None else 1
        raise FormSyntaxError(f"Malformed document: {exc}", line=line, column=column)
    if not isinstance(data, dict):
        raise FormSyntaxError("Expected a mapping with vars and form", line=1, column=1)
    try:
        document = FormDocument.model_validate(data)
    except ValidationError as exc:
        raise FormSyntaxError(f"Invalid document: {exc}", line=1, column=1) from exc
    check_declarations(document.vars)
    line, column = _form_position(text)
    form = parse_form(document.form, document.vars, line=line, column=column)
    if form.arity != 1:
        raise FormSyntaxError(
            f"Expected a 1-form, got arity {form.arity}", line=line, column=column
        )
    LOG.debug("Read a form in %s", document.vars)
    return LoadedForm(document, DForm(1, form.components, document.vars))


def read_form_document(source: StreamOrPath) -> LoadedForm:
    """Read a form document from a path or stream."""
    return parse_form_document(read_text(source))


def read_foliation(source: StreamOrPath) -> tuple[Foliation, LoadedForm]:
    """Read a document and validate its form as a foliation."""
    loaded = read_form_document(source)
    foliation = Foliation.from_form(loaded.form, variables=loaded.document.vars)
    expected = loaded.document.degree
    if expected is not None and expected != foliation.degree:
        raise InvalidFoliation(
            f"Document declares degree {expected}, "
            f"the form has degree {foliation.degree}",
            context={"declared": expected, "degree": foliation.degree},
        )
    return foliation, loaded
