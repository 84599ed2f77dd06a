"""Runtime settings for the classifier and the witness scan."""

from fractions import Fraction
from pathlib import Path

import yaml
from pydantic import BaseModel, ConfigDict, Field, field_validator

from foliate.io.types import Pathish

DEFAULT_GRID = ["-2", "-3/2", "-1", "-1/2", "0", "1/2", "1", "3/2", "2"]


class Settings(BaseModel):  # pylint: disable=too-few-public-methods
    """Bounds for the searches that the theory leaves open."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    gvs_cap: int = Field(default=8, ge=1)
    darboux_max_exponent: int = Field(default=3, ge=1)
    darboux_max_factors: int = Field(default=4, ge=1)
    ansatz_max_degree: int = Field(default=6, ge=0)
    grid_values: list[str] = Field(default_factory=lambda: list(DEFAULT_GRID))
    max_recursion_depth: int = Field(default=8, ge=1)

    @field_validator("grid_values")
    @classmethod
    def check_rational(cls, values: list[str]) -> list[str]:
        """Grid values must be exact rationals."""
        for value in values:
            try:
                Fraction(value)
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"grid value {value!r} is not a rational") from exc
        return values

    @property
    def grid(self) -> list[Fraction]:
        """Grid values as fractions."""
        return [Fraction(v) for v in self.grid_values]


DEFAULT_SETTINGS = Settings()


def read_settings(path: Pathish) -> Settings:
    """Read a settings file and return it as a settings object."""
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"file {path.name} not found, please check the path.")

    with path.open(encoding="utf-8") as f:
        data = yaml.safe_load(f) or {}
        return Settings.model_validate(data)
