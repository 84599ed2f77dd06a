"""Transversely affine and projective structures and the beta system."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from foliate.algebra.ratfun import RatFun
from foliate.exceptions import StructuralSystemViolated
from foliate.forms import Check, DForm

LOG = logging.getLogger(__name__)


def _first_failure(name: str, checks: list[Check]) -> Check:
    for check in checks:
        if not check.passed:
            return Check(name, False, check.witness, check.message)
    return Check(name, True)


@dataclass(frozen=True)
class AffineWitness:
    """d omega0 = omega0 ^ omega1 and d omega1 = 0."""

    omega0: DForm
    omega1: DForm

    def checks(self) -> list[Check]:
        """Both defining equations."""
        return [
            Check.equal(
                "domega0 = omega0^omega1",
                self.omega0.d(),
                self.omega0.wedge(self.omega1),
            ),
            Check.vanishes("domega1 = 0", self.omega1.d()),
        ]


@dataclass(frozen=True)
class ProjectiveTriple:
    """d w0 = w0^w1, d w1 = w0^w2, d w2 = w1^w2."""

    omega0: DForm
    omega1: DForm
    omega2: DForm

    @property
    def pure(self) -> bool:
        """True when omega2 does not vanish."""
        return not self.omega2.is_zero

    def checks(self) -> list[Check]:
        """The three defining equations."""
        w0, w1, w2 = self.omega0, self.omega1, self.omega2
        return [
            Check.equal("domega0 = omega0^omega1", w0.d(), w0.wedge(w1)),
            Check.equal("domega1 = omega0^omega2", w1.d(), w0.wedge(w2)),
            Check.equal("domega2 = omega1^omega2", w2.d(), w1.wedge(w2)),
        ]

    def as_affine(self) -> AffineWitness:
        """The pair (omega0, omega1) of a triple with omega2 = 0."""
        if self.pure:
            raise ValueError("A pure triple is not an affine structure")
        return AffineWitness(self.omega0, self.omega1)


@dataclass(frozen=True)
class StructuralBetas:
    """beta0, beta1, beta2 free of the fiber variable."""

    beta0: DForm
    beta1: DForm
    beta2: DForm
    fiber: str = "x"

    def __post_init__(self) -> None:
        pieces = (("beta0", self.beta0), ("beta1", self.beta1), ("beta2", self.beta2))
        for name, beta in pieces:
            if self.fiber in beta.used_variables():
                raise ValueError(f"{name} depends on the fiber variable {self.fiber}")

    def checks(self) -> list[Check]:
        """db0 = b0^b1, db1 = 2 b0^b2, db2 = b1^b2."""
        b0, b1, b2 = self.beta0, self.beta1, self.beta2
        return [
            Check.equal("dbeta0 = beta0^beta1", b0.d(), b0.wedge(b1)),
            Check.equal("dbeta1 = 2 beta0^beta2", b1.d(), b0.wedge(b2) * 2),
            Check.equal("dbeta2 = beta1^beta2", b2.d(), b1.wedge(b2)),
        ]


def verify_affine(witness: AffineWitness) -> Check:
    """Both affine equations, reporting the first failure."""
    return _first_failure("affine structure", witness.checks())


def verify_projective(triple: ProjectiveTriple) -> Check:
    """All three projective equations, reporting the first failure."""
    return _first_failure("projective structure", triple.checks())


def structural_system_check(betas: StructuralBetas) -> Check:
    """The beta system, reporting the first failing equation."""
    return _first_failure("structural system", betas.checks())


def riccati_triple(betas: StructuralBetas) -> ProjectiveTriple:
    """Projective triple of dx + beta0 + x beta1 + x^2 beta2.

    omega0 is the form itself, omega1 = beta1 + 2x beta2 and omega2 = 2 beta2.
    """
    for check in betas.checks():
        if not check.passed:
            raise StructuralSystemViolated(
                f"Structural equation {check.name} fails: {check.message}",
                equation=check.name,
            )
    x = RatFun.var(betas.fiber)
    dx = DForm.differential(betas.fiber)
    omega0 = dx + betas.beta0 + betas.beta1 * x + betas.beta2 * (x * x)
    omega1 = betas.beta1 + betas.beta2 * (x * 2)
    omega2 = betas.beta2 * 2
    triple = ProjectiveTriple(omega0, omega1, omega2)
    LOG.debug("Riccati triple built, pure = %s", triple.pure)
    return triple
