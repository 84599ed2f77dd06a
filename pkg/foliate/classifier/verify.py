"""Independent re-check of a certificate against a foliation.

Nothing computed by the classifier is trusted: the strict transform is
recomputed from the foliation, the recorded steps are replayed on it and every
identity the payload claims is checked again on the parsed forms.
"""

from __future__ import annotations

import logging
from fractions import Fraction

from foliate.algebra.quadratic import QuadCoverRing
from foliate.blowup import (
    AffineExpansion,
    BlowupChartData,
    blowup_chart,
    blowup_identities,
    case_tag,
    expand_at_point,
)
from foliate.config import DEFAULT_SETTINGS, Settings
from foliate.exceptions import FoliateError, FormSyntaxError
from foliate.foliation import (
    ChartPoint,
    Foliation,
    affine_restrict,
    has_jet2,
    radial_contraction,
)
from foliate.forms import Check, DForm, RationalMap, VField, pullback
from foliate.io.formtext import parse_coefficient, parse_form
from foliate.transverse import (
    AffineWitness,
    ProjectiveTriple,
    gvs_compute,
    gvs_verify,
)

from .core import parse_point_label
from .handlers import linear_target
from .models import (
    Affine,
    Case4NeedsData,
    Certificate,
    CheckRecord,
    FiniteGVS,
    FirstIntegralConditional,
    LinearPullback,
    PureProjective,
    RiccatiPullback,
    VerificationReport,
)
from .provenance import replay
from .riccati import BASE, FIBER, riccati_form

LOG = logging.getLogger(__name__)


class _Context:
    """Recomputed data the payload checks run against."""

    def __init__(self, expansion: AffineExpansion, chart: BlowupChartData):
        self.expansion = expansion
        self.chart = chart
        self.form: DForm = chart.eta
        self.variables: tuple[str, ...] = chart.variables
        self.ring: QuadCoverRing | None = None

    def parse(self, text: str) -> DForm:
        """A recorded form in the replayed coordinates."""
        return parse_form(text, self.variables, ring=self.ring)


def _scan_checks(cert: FirstIntegralConditional, foliation: Foliation) -> list[Check]:
    checks = []
    for label in cert.scanned:
        point = parse_point_label(label)
        omega_e = affine_restrict(foliation, point.chart)
        jet2 = has_jet2(omega_e, point.as_mapping(foliation))
        checks.append(Check(f"jet order below two at {label}", not jet2))
    return checks


def _origin_checks(
    cert: Certificate, foliation: Foliation
) -> tuple[list[Check], _Context]:
    origin = cert.origin
    if origin is None:
        raise ValueError("The certificate records no origin")
    point = ChartPoint(origin.chart, tuple(Fraction(c) for c in origin.point))
    expansion = expand_at_point(foliation, point)
    chart = blowup_chart(expansion)
    recorded = parse_form(origin.eta, origin.variables)
    checks = [
        Check("n", origin.n == foliation.n, message=f"recorded {origin.n}"),
        Check.equal("eta = recomputed strict transform", recorded, chart.eta),
        Check(
            "case tag",
            case_tag(chart).case == origin.case,
            message=f"recomputed {case_tag(chart)}, recorded Case{origin.case}",
        ),
    ]
    checks += blowup_identities(expansion, chart)
    return checks, _Context(expansion, chart)


def _cover_check(
    ring: QuadCoverRing | None, recorded: str | None, variables: tuple[str, ...]
) -> Check:
    """The recorded relation g^2 = r names the replayed generator and relation."""
    name = "cover relation"
    if ring is None or recorded is None:
        same = ring is None and recorded is None
        return Check(name, same, message=f"replay gives {ring}, recorded {recorded}")
    square, _, relation = recorded.partition("=")
    generator = square.strip().removesuffix("^2").strip()
    if generator != ring.generator or not relation.strip():
        return Check(name, False, message=f"replay gives {ring}, recorded {recorded}")
    try:
        difference = parse_coefficient(relation, variables) - ring.relation
    except FormSyntaxError as exc:
        return Check(name, False, message=str(exc))
    return Check(name, difference.is_zero, message=f"replay gives {ring}")


def _replay_checks(cert: Certificate, ctx: _Context) -> list[Check]:
    form, variables = replay(ctx.chart.eta, cert.steps)
    ctx.form, ctx.variables, ctx.ring = form, variables, form.ring
    return [
        Check(
            "replayed coordinates",
            list(variables) == cert.variables,
            message=f"replay ends in {list(variables)}",
        ),
        _cover_check(form.ring, cert.cover, variables),
        Check("replayed form != 0", not form.is_zero),
    ]


def _linear_checks(
    cert: LinearPullback, ctx: _Context, settings: Settings
) -> list[Check | CheckRecord]:
    checks: list[Check | CheckRecord] = []
    for degree in (2, 3, 4):
        piece = ctx.expansion.piece(degree)
        checks.append(Check.vanishes(f"alpha_{degree} = 0", piece))
    target = linear_target(ctx.expansion)
    alpha5 = parse_form(cert.alpha5, cert.target_variables)
    checks.append(Check.equal("alpha5 = saturated top piece", alpha5, target.omega))
    checks.append(Check("i_R(alpha5) = 0", radial_contraction(alpha5).is_zero))
    same_degree = target.degree == cert.target_degree
    checks.append(Check("target degree", same_degree, message=str(target.degree)))
    if cert.target is not None:
        nested = verify_certificate(cert.target, target, settings=settings)
        for record in nested.checks:
            checks.append(
                record.model_copy(update={"name": f"target: {record.name}"})
            )
    return checks


def _affine_checks(cert: Affine, ctx: _Context) -> list[Check]:
    witness = AffineWitness(ctx.parse(cert.omega0), ctx.parse(cert.omega1))
    replayed = Check.equal("omega0 = replayed form", witness.omega0, ctx.form)
    nonzero = Check("omega0 != 0", not witness.omega0.is_zero)
    return [replayed, nonzero] + witness.checks()


def _projective_checks(cert: PureProjective, ctx: _Context) -> list[Check]:
    triple = ProjectiveTriple(
        ctx.parse(cert.omega0), ctx.parse(cert.omega1), ctx.parse(cert.omega2)
    )
    return [
        Check.equal("omega0 = replayed form", triple.omega0, ctx.form),
        Check("omega0 != 0", not triple.omega0.is_zero),
        Check("omega2 != 0", triple.pure),
    ] + triple.checks()


def _gvs_checks(cert: FiniteGVS, ctx: _Context, settings: Settings) -> list[Check]:
    forms = [ctx.parse(text) for text in cert.forms]
    field = VField.coordinate(cert.field, ctx.variables)
    sequence = gvs_compute(ctx.form, field, max(settings.gvs_cap, cert.length))
    checks = [
        Check("length >= 3", cert.length >= 3, message=f"length {cert.length}"),
        Check("omega0 != 0", bool(forms) and not forms[0].is_zero),
        Check(
            "recomputed length",
            sequence.finite and sequence.length == cert.length,
            message=f"recomputed {sequence.length}",
        ),
        gvs_verify(sequence),
    ]
    for k, form in enumerate(forms):
        checks.append(Check.equal(f"omega{k} = recomputed", form, sequence[k]))
    return checks


def _riccati_checks(cert: RiccatiPullback, ctx: _Context) -> list[Check]:
    omega0 = ctx.parse(cert.omega0)
    psi1 = parse_coefficient(cert.psi1, (BASE,))
    psi2 = parse_coefficient(cert.psi2, (BASE,))
    theta = parse_form(cert.theta, (BASE, FIBER))
    components = {
        name: parse_coefficient(text, ctx.variables) for name, text in cert.phi.items()
    }
    phi = RationalMap(components, ctx.variables)
    return [
        Check.equal("omega0 = replayed form", omega0, ctx.form),
        Check.equal("theta = Riccati form of psi1", theta, riccati_form(psi1, psi2)),
        Check.equal("omega0 = phi^*theta", omega0, pullback(phi, theta)),
    ]


def _needs_data_checks(cert: Case4NeedsData, ctx: _Context) -> list[Check]:
    checks = [Check("case 4", case_tag(ctx.chart).case == 4)]
    if "theta2" in cert.forms:
        theta2 = parse_form(cert.forms["theta2"], ctx.chart.tau)
        checks.append(Check.equal("theta2 = recomputed", theta2, ctx.chart.theta_j(2)))
    return checks


def _payload_checks(
    cert: Certificate, ctx: _Context, settings: Settings
) -> list[Check | CheckRecord]:
    if isinstance(cert, LinearPullback):
        return _linear_checks(cert, ctx, settings)
    if isinstance(cert, Affine):
        return list(_affine_checks(cert, ctx))
    if isinstance(cert, PureProjective):
        return list(_projective_checks(cert, ctx))
    if isinstance(cert, FiniteGVS):
        return list(_gvs_checks(cert, ctx, settings))
    if isinstance(cert, RiccatiPullback):
        return list(_riccati_checks(cert, ctx))
    if isinstance(cert, Case4NeedsData):
        return list(_needs_data_checks(cert, ctx))
    raise ValueError(f"Unknown certificate kind {cert.kind}")


def _as_records(checks: list[Check | CheckRecord]) -> list[CheckRecord]:
    return [
        c if isinstance(c, CheckRecord) else CheckRecord.from_check(c) for c in checks
    ]


def verify_certificate(
    cert: Certificate, foliation: Foliation, *, settings: Settings = DEFAULT_SETTINGS
) -> VerificationReport:
    """Report of every identity the certificate claims, rechecked from scratch.

    Errors while replaying are reported as a failed check, never raised.
    """
    checks: list[Check | CheckRecord] = []
    try:
        if isinstance(cert, FirstIntegralConditional):
            checks += _scan_checks(cert, foliation)
        else:
            origin_checks, ctx = _origin_checks(cert, foliation)
            checks += origin_checks
            checks += _replay_checks(cert, ctx)
            checks += _payload_checks(cert, ctx, settings)
    except (FoliateError, ValueError, KeyError) as exc:
        LOG.warning("Replay of the %s certificate failed: %s", cert.kind, exc)
        checks.append(Check("replay", False, message=str(exc)))
    report = VerificationReport(kind=cert.kind, checks=_as_records(checks))
    failed = report.failed
    if failed:
        LOG.info("Verification failed: %s", ", ".join(failed))
    else:
        LOG.info("All %d checks passed", len(report.checks))
    return report
