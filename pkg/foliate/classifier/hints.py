"""User supplied data for the case 4 integrating factor."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from foliate.algebra.ratfun import RatFun
from foliate.exceptions import NonRationalDataNeeded


@dataclass(frozen=True)
class Case4Hints:
    """An integrating factor f^exponent of alpha_2, f in the expansion variables."""

    integrating_factor: RatFun | None = None
    exponent: Fraction = Fraction(1)

    def factor_in_chart(
        self, variables: tuple[str, ...], tau: tuple[str, ...]
    ) -> RatFun:
        """The hint dehomogenized on the blow-up chart: z_j -> tau_j, z_n -> 1."""
        if self.integrating_factor is None:
            raise ValueError("No integrating factor hint given")
        if self.exponent.denominator != 1:
            raise NonRationalDataNeeded(
                f"The hint {self.integrating_factor}^{self.exponent} needs a root",
                context={"exponent": str(self.exponent)},
            )
        bindings: dict[str, RatFun | int] = {
            name: RatFun.var(t) for name, t in zip(variables, tau)
        }
        bindings[variables[-1]] = 1
        base = self.integrating_factor.substitute(bindings)
        return base ** int(self.exponent)
