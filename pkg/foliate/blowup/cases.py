"""Case tags from the vanishing of F_3, F_4, F_5."""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum


class Outcome(StrEnum):
    """Kinds of foliation a case can produce."""

    PULLBACK = "pull-back"
    AFFINE = "transversely affine"
    PROJECTIVE = "transversely projective"


# (F3 nonzero, F4 nonzero, F5 nonzero) -> case
CASE_PATTERNS: dict[tuple[bool, bool, bool], int] = {
    (False, False, False): 1,
    (True, False, False): 2,
    (False, False, True): 3,
    (False, True, False): 4,
    (False, True, True): 4,
    (True, True, False): 5,
    (True, False, True): 6,
    (True, True, True): 7,
}

CASE_TABLE: dict[int, tuple[str, tuple[Outcome, ...]]] = {
    1: ("F3 = F4 = F5 = 0", (Outcome.PULLBACK,)),
    2: ("F4 = F5 = 0, F3 != 0", (Outcome.PULLBACK, Outcome.AFFINE)),
    3: (
        "F3 = F4 = 0, F5 != 0",
        (Outcome.PULLBACK, Outcome.AFFINE, Outcome.PROJECTIVE),
    ),
    4: ("F3 = 0, F4 != 0", (Outcome.PULLBACK, Outcome.AFFINE)),
    5: ("F5 = 0, F3 != 0, F4 != 0", (Outcome.AFFINE, Outcome.PROJECTIVE)),
    6: ("F4 = 0, F3 != 0, F5 != 0", (Outcome.AFFINE, Outcome.PROJECTIVE)),
    7: ("F3, F4, F5 != 0", (Outcome.AFFINE, Outcome.PROJECTIVE)),
}


@dataclass(frozen=True)
class CaseTag:
    """Case number with the vanishing pattern it was read from."""

    case: int
    pattern: tuple[bool, bool, bool]

    def __str__(self) -> str:
        return f"Case{self.case}"


def tag_for_pattern(pattern: tuple[bool, bool, bool]) -> CaseTag:
    """Tag of a nonvanishing pattern (F3, F4, F5)."""
    return CaseTag(CASE_PATTERNS[pattern], pattern)
