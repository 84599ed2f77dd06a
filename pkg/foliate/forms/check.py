"""Outcome of an exact identity check."""

from __future__ import annotations

from dataclasses import dataclass

from .dform import DForm


@dataclass(frozen=True)
class Check:
    """A named identity with its verdict and the offending form on failure."""

    name: str
    passed: bool
    witness: DForm | None = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.passed

    @classmethod
    def vanishes(cls, name: str, form: DForm) -> Check:
        """Passes when the form is zero, otherwise keeps it as witness."""
        if form.is_zero:
            return cls(name, True)
        return cls(name, False, form, f"{name}: residual {form}")

    @classmethod
    def equal(cls, name: str, left: DForm, right: DForm) -> Check:
        """Passes when both sides agree."""
        return cls.vanishes(name, left - right)


def all_passed(checks: list[Check]) -> bool:
    """True when every check passed."""
    return all(check.passed for check in checks)
