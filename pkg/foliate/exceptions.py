"""Exceptions used by foliate."""

from typing import Any


class FoliateError(Exception):
    """Base for all foliate errors."""

    def __init__(self, message: str, *, context: dict[str, Any] | None = None):
        super().__init__(message)
        self.context = context or {}


class DivisionByZero(FoliateError):
    """Division by an identically zero element."""


class NonRationalDataNeeded(FoliateError):
    """A step would need a constant outside the rationals."""


class ArityError(FoliateError):
    """Form arity outside the supported range 0..3."""


class IncompatibleRings(FoliateError):
    """Coefficients live in different quadratic covers."""


class InvalidFoliation(FoliateError):
    """A defining form violates a foliation invariant."""


class JetTooLow(FoliateError):
    """The expansion point has jet order below two."""


class DegreeMismatch(FoliateError):
    """The foliation does not have the degree the operation needs."""


class NotTransverse(FoliateError):
    """The vector field is tangent to the form, i_X(omega) vanishes."""


class StructuralSystemViolated(FoliateError):
    """One of the three beta equations does not hold."""

    def __init__(
        self, message: str, *, equation: str, context: dict[str, Any] | None = None
    ):
        super().__init__(message, context=context)
        self.equation = equation


class DerivedRelationFailed(FoliateError):
    """A relation implied by integrability does not hold for the input."""


class InconsistentCase1(FoliateError):
    """Lower pieces survive although all F_j vanish."""


class InexactBlowup(FoliateError):
    """The pulled back form is not divisible by the exceptional factor."""


class DegenerateStep(FoliateError):
    """A recorded step is not invertible: a zero factor or a singular map."""


class FormSyntaxError(FoliateError):
    """Malformed form text."""

    def __init__(
        self,
        message: str,
        *,
        line: int,
        column: int,
        context: dict[str, Any] | None = None,
    ):
        super().__init__(f"{message} (line {line}, column {column})", context=context)
        self.line = line
        self.column = column


class UnknownVariable(FormSyntaxError):
    """A form refers to a variable that was never declared."""


class CertificateFormatError(FoliateError):
    """A certificate document could not be read."""
