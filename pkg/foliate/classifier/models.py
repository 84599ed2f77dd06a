"""Certificate models.

Forms, functions and maps are stored as canonical text so a certificate can be
written, read back and re-verified without the objects that produced it.
"""

from __future__ import annotations

from enum import StrEnum
from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Field

from foliate.forms import Check

FORMAT_VERSION = 1


class RWModel(BaseModel):  # pylint: disable=too-few-public-methods
    """Base model for read/ write operations"""

    model_config = ConfigDict(
        populate_by_name=True,
        use_enum_values=True,
    )


class CertificateKind(StrEnum):
    """Certificate variants."""

    FIRST_INTEGRAL_CONDITIONAL = "first_integral_conditional"
    LINEAR_PULLBACK = "linear_pullback"
    AFFINE = "affine"
    PURE_PROJECTIVE = "pure_projective"
    FINITE_GVS = "finite_gvs"
    RICCATI_PULLBACK = "riccati_pullback"
    CASE4_NEEDS_DATA = "case4_needs_data"


class CheckRecord(RWModel):
    """Outcome of one named identity."""

    name: str
    passed: bool
    message: str = ""

    @classmethod
    def from_check(cls, check: Check) -> CheckRecord:
        """Record of a computed check."""
        return cls(name=check.name, passed=check.passed, message=check.message)


class Origin(RWModel):
    """Where the classification started: chart, point and strict transform."""

    n: int
    chart: int
    point: list[str]
    case: int
    variables: list[str]
    eta: str


class MapStep(RWModel):
    """Pull-back by a rational map, target variable -> function of source."""

    kind: Literal["map"] = "map"
    source: list[str]
    components: dict[str, str]


class ScaleStep(RWModel):
    """Multiplication by a function, possibly on the current cover."""

    kind: Literal["scale"] = "scale"
    factor: str


class CoverStep(RWModel):
    """Lift to the branched cover generator^2 = relation."""

    kind: Literal["cover"] = "cover"
    generator: str
    relation: str
    vertical: str


Step = Annotated[MapStep | ScaleStep | CoverStep, Field(discriminator="kind")]


class CertificateBase(RWModel):
    """Fields shared by every certificate."""

    origin: Origin | None = None
    steps: list[Step] = Field(default_factory=list)
    variables: list[str] = Field(default_factory=list)
    cover: str | None = None
    polar_factors: list[str] = Field(default_factory=list)
    checks: list[CheckRecord] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        """True when every recorded check passed."""
        return all(check.passed for check in self.checks)


class FirstIntegralConditional(CertificateBase):
    """No scanned point has jet order two.

    A rational first integral follows only if the jet order is at most one at
    every point, which the scan cannot establish.
    """

    kind: Literal["first_integral_conditional"] = "first_integral_conditional"
    scanned: list[str] = Field(default_factory=list)


class LinearPullback(CertificateBase):
    """The foliation is defined by the top piece alone, a cone over P^{n-1}."""

    kind: Literal["linear_pullback"] = "linear_pullback"
    alpha5: str
    target_variables: list[str]
    target_degree: int
    target: Certificate | None = None


class Affine(CertificateBase):
    """d omega0 = omega0 ^ omega1, d omega1 = 0."""

    kind: Literal["affine"] = "affine"
    omega0: str
    omega1: str


class PureProjective(CertificateBase):
    """Projective triple with omega2 != 0."""

    kind: Literal["pure_projective"] = "pure_projective"
    omega0: str
    omega1: str
    omega2: str


class FiniteGVS(CertificateBase):
    """Terminating Godbillon-Vey sequence of length at least three."""

    kind: Literal["finite_gvs"] = "finite_gvs"
    field: str
    length: int
    forms: list[str]


class RiccatiPullback(CertificateBase):
    """omega0 = phi^* theta for theta = dy - (y^2 + psi2(x)) psi1(x) dx."""

    kind: Literal["riccati_pullback"] = "riccati_pullback"
    omega0: str
    phi: dict[str, str]
    theta: str
    psi1: str
    psi2: str = "x"


class Case4NeedsData(CertificateBase):
    """Computed forms of a case 4 chart that the searches could not finish."""

    kind: Literal["case4_needs_data"] = "case4_needs_data"
    forms: dict[str, str] = Field(default_factory=dict)
    missing: str


Certificate = Annotated[
    FirstIntegralConditional
    | LinearPullback
    | Affine
    | PureProjective
    | FiniteGVS
    | RiccatiPullback
    | Case4NeedsData,
    Field(discriminator="kind"),
]

LinearPullback.model_rebuild()


class Transcript(RWModel):
    """Summary of the checks recorded in a certificate tree."""

    passed: bool
    failed: list[str] = Field(default_factory=list)


class CertificateDocument(RWModel):
    """Versioned container written to disk."""

    format_version: int = FORMAT_VERSION
    certificate: Certificate
    transcript: Transcript


class VerificationReport(RWModel):
    """Every identity re-checked by the verifier."""

    kind: str
    checks: list[CheckRecord] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        """True when every check passed."""
        return bool(self.checks) and all(check.passed for check in self.checks)

    @property
    def failed(self) -> list[str]:
        """Names of the failing checks."""
        return [check.name for check in self.checks if not check.passed]
