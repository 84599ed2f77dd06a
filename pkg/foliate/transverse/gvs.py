"""Godbillon-Vey sequences along a transverse vector field."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

from foliate.algebra.ratfun import RatFun
from foliate.exceptions import NotTransverse
from foliate.forms import Check, DForm, VField

from .structures import ProjectiveTriple

LOG = logging.getLogger(__name__)

DEFAULT_CAP = 8


@dataclass(frozen=True)
class GVSeq:
    """omega_k = L_X^k(omega_0) up to the first zero or the cap."""

    forms: tuple[DForm, ...]
    field: VField
    finite: bool

    @property
    def length(self) -> int:
        """Largest index with a nonzero form."""
        return len(self.forms) - 1

    def __getitem__(self, index: int) -> DForm:
        if index < len(self.forms):
            return self.forms[index]
        return DForm.zero(1, self.forms[0].variables, self.forms[0].ring)


def gvs_compute(omega: DForm, field: VField, cap: int = DEFAULT_CAP) -> GVSeq:
    """Iterate the Lie derivative after normalizing i_X(omega) to one."""
    contraction = omega.contract(field)
    if contraction.is_zero:
        raise NotTransverse(f"The field {field} is tangent to {omega}")
    current = omega if contraction == 1 else omega / contraction
    forms = [current]
    while True:
        following = current.lie(field)
        if following.is_zero:
            LOG.debug("G-V-S terminates with length %d", len(forms) - 1)
            return GVSeq(tuple(forms), field, True)
        if len(forms) > cap:
            LOG.debug("G-V-S reached the cap %d", cap)
            return GVSeq(tuple(forms), field, False)
        forms.append(following)
        current = following


def _fresh_name(used: tuple[str, ...]) -> str:
    name = "z"
    while name in used:
        name = name + "_"
    return name


def extended_form(sequence: GVSeq) -> tuple[DForm, str]:
    """Omega = dz + sum z^k/k! omega_k on the ring extended by a fresh z."""
    used: tuple[str, ...] = ()
    for form in sequence.forms:
        used = used + form.variables
    name = _fresh_name(used)
    z = RatFun.var(name)
    total = DForm.differential(name)
    for k, form in enumerate(sequence.forms):
        total = total + form * (z**k / math.factorial(k))
    return total, name


def gvs_verify(sequence: GVSeq) -> Check:
    """Omega ^ d Omega = 0 exactly; only finite sequences qualify."""
    if not sequence.finite:
        return Check("Omega^dOmega", False, message="sequence reached the cap")
    big_omega, _ = extended_form(sequence)
    return Check.vanishes("Omega^dOmega", big_omega.wedge(big_omega.d()))


def gvs_triple(sequence: GVSeq) -> ProjectiveTriple:
    """(omega0, omega1, omega2) of a finite sequence of length at most two."""
    if not sequence.finite or sequence.length > 2:
        raise ValueError(f"G-V-S of length {sequence.length} has no projective triple")
    return ProjectiveTriple(sequence[0], sequence[1], sequence[2])
