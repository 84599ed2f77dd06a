"""Building blocks shared by the case handlers."""

from __future__ import annotations

import logging
from typing import Iterable

from foliate.algebra.poly import Variables
from foliate.algebra.quadratic import QuadElement
from foliate.algebra.ratfun import RatFun
from foliate.blowup import BlowupChartData, case_tag
from foliate.config import Settings
from foliate.exceptions import DerivedRelationFailed, NotTransverse
from foliate.forms import Check, DForm, VField
from foliate.transverse import (
    AffineWitness,
    ProjectiveTriple,
    gvs_compute,
    gvs_triple,
    gvs_verify,
    polar_locus,
)

from ..models import Affine, CheckRecord, FiniteGVS, PureProjective
from ..provenance import Trail

LOG = logging.getLogger(__name__)


def require_case(chart: BlowupChartData, *cases: int) -> None:
    """Reject chart data whose tag belongs to another handler."""
    tag = case_tag(chart)
    if tag.case not in cases:
        raise ValueError(f"Handler for case {cases} called on {tag}")


def fresh(name: str, used: Iterable[str]) -> str:
    """A coordinate name not in use, built by appending underscores."""
    taken = set(used)
    while name in taken:
        name = name + "_"
    return name


def records(checks: Iterable[Check]) -> list[CheckRecord]:
    """Check records for a certificate."""
    return [CheckRecord.from_check(check) for check in checks]


def trail_fields(trail: Trail, forms: Iterable[DForm]) -> dict:
    """Steps, coordinates, cover and polar locus of a witness."""
    return {
        "steps": list(trail.steps),
        "variables": list(trail.variables),
        "cover": trail.cover_text,
        "polar_factors": [str(p) for p in polar_locus(forms)],
    }


def unit_vertical(trail: Trail, fiber: str) -> DForm:
    """Scale the trail so that the coefficient of d<fiber> is one."""
    contraction = trail.form.contract(VField.coordinate(fiber, trail.variables))
    if contraction.is_zero:
        raise NotTransverse(f"d{fiber} does not occur in {trail.form}")
    if contraction != 1:
        if isinstance(contraction, QuadElement):
            trail.scale(contraction.inverse())
        else:
            trail.scale(1 / contraction)
    return trail.form


def same_form(name: str, trail: Trail, expected: DForm) -> Check:
    """The trail has produced the expected form."""
    return Check.equal(name, trail.form, expected)


def from_triple(
    trail: Trail, triple: ProjectiveTriple, checks: list[Check]
) -> Affine | PureProjective:
    """Affine certificate when omega2 vanishes, pure projective otherwise."""
    checks = checks + [same_form("omega0 = transformed eta", trail, triple.omega0)]
    if triple.pure:
        checks = checks + triple.checks()
        forms = [triple.omega0, triple.omega1, triple.omega2]
        LOG.info("Pure transversely projective structure")
        return PureProjective(
            omega0=str(triple.omega0),
            omega1=str(triple.omega1),
            omega2=str(triple.omega2),
            checks=records(checks),
            **trail_fields(trail, forms),
        )
    witness = triple.as_affine()
    return affine_certificate(trail, witness, checks)


def affine_certificate(
    trail: Trail, witness: AffineWitness, checks: list[Check]
) -> Affine:
    """Affine certificate with the defining equations recorded."""
    checks = checks + witness.checks()
    LOG.info("Transversely affine structure")
    return Affine(
        omega0=str(witness.omega0),
        omega1=str(witness.omega1),
        checks=records(checks),
        **trail_fields(trail, [witness.omega0, witness.omega1]),
    )


def finish_by_gvs(
    trail: Trail, fiber: str, settings: Settings, checks: list[Check] | None = None
) -> Affine | PureProjective | FiniteGVS:
    """Classify the trail form by its G-V-S along the fiber field."""
    checks = list(checks or [])
    unit_vertical(trail, fiber)
    field = VField.coordinate(fiber, trail.variables)
    sequence = gvs_compute(trail.form, field, settings.gvs_cap)
    if not sequence.finite:
        last = sequence.forms[-1]
        raise DerivedRelationFailed(
            f"G-V-S along d/d{fiber} does not stop within {settings.gvs_cap} steps",
            context={"fiber": fiber, "last": str(last)},
        )
    checks.append(gvs_verify(sequence))
    if sequence.length <= 2:
        return from_triple(trail, gvs_triple(sequence), checks)
    LOG.info("Finite G-V-S of length %d", sequence.length)
    return FiniteGVS(
        field=fiber,
        length=sequence.length,
        forms=[str(form) for form in sequence.forms],
        checks=records(checks),
        **trail_fields(trail, sequence.forms),
    )


def finite_gvs(
    trail: Trail, fiber: str, settings: Settings, checks: list[Check] | None = None
) -> FiniteGVS:
    """A G-V-S that has length three or more by construction."""
    certificate = finish_by_gvs(trail, fiber, settings, checks)
    if not isinstance(certificate, FiniteGVS):
        raise DerivedRelationFailed(
            f"Expected a G-V-S of length at least three, got {certificate.kind}"
        )
    return certificate


def flip_to_affine(
    trail: Trail,
    fiber: str,
    base: Variables,
    beta1: DForm,
    beta2: DForm,
    checks: list[Check] | None = None,
) -> Affine:
    """Affine witness of d<fiber> + fiber beta1 + fiber^2 beta2.

    With w = 1/fiber the form becomes Omega = dw - beta2 - w beta1 up to -w^2,
    and d Omega = Omega ^ (-beta1).
    """
    checks = list(checks or [])
    closed = Check.vanishes("dbeta1 = 0", beta1.d())
    relation = Check.equal("dbeta2 = beta1^beta2", beta2.d(), beta1.wedge(beta2))
    for check in (closed, relation):
        if not check:
            raise DerivedRelationFailed(
                f"{check.name} fails: {check.message}", context={"relation": check.name}
            )
    w = fresh("w", base)
    big_w = RatFun.var(w)
    trail.map({fiber: 1 / big_w}, base + (w,))
    trail.scale(-(big_w**2))
    omega = DForm.differential(w) - beta2 - beta1 * big_w
    checks += [closed, relation, same_form("Omega = dw - b2 - w b1", trail, omega)]
    return affine_certificate(trail, AffineWitness(trail.form, -beta1), checks)
