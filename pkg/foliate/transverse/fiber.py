"""Reading beta coefficients off a form polynomial in a fiber variable."""

from __future__ import annotations

from dataclasses import dataclass

from foliate.algebra.quadratic import QuadElement
from foliate.forms import Coeff, DForm


@dataclass(frozen=True)
class FiberExpansion:
    """form = sum_k fiber^k (beta_k + c_k d fiber) with fiber-free beta_k, c_k."""

    fiber: str
    base: dict[int, DForm]
    vertical: dict[int, Coeff]

    def beta(self, power: int) -> DForm:
        """beta_power, the base part at this power."""
        if power in self.base:
            return self.base[power]
        sample = next(iter(self.base.values()), None)
        if sample is None:
            return DForm.zero(1)
        return DForm.zero(1, sample.variables, sample.ring)

    def vertical_coefficient(self, power: int) -> Coeff | None:
        """Coefficient of fiber^power d fiber."""
        return self.vertical.get(power)

    @property
    def top_power(self) -> int:
        """Highest power of the fiber with a nonzero part, -1 for zero."""
        return max(list(self.base) + list(self.vertical), default=-1)

    def odd_powers(self) -> list[int]:
        """Powers whose coefficients have a nonzero generator part."""
        odd = set()
        for power, form in self.base.items():
            coeffs = [c for _, c in form.items()]
            if any(isinstance(c, QuadElement) and not c.is_base for c in coeffs):
                odd.add(power)
        for power, coeff in self.vertical.items():
            if isinstance(coeff, QuadElement) and not coeff.is_base:
                odd.add(power)
        return sorted(odd)


def fiber_expansion(form: DForm, fiber: str) -> FiberExpansion:
    """Split a 1-form into powers of the fiber variable."""
    base = {}
    vertical = {}
    for power, part in form.split_powers(fiber).items():
        beta = part.drop(fiber)
        if not beta.is_zero:
            base[power] = beta
        coeff = part.coefficient(fiber)
        if not coeff.is_zero:
            vertical[power] = coeff
    return FiberExpansion(fiber, base, vertical)
