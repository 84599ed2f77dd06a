"""Shared IO types."""

from os import PathLike
from pathlib import Path
from typing import TextIO, TypeAlias

# Path-ish types that are commonly accepted by open()
Pathish: TypeAlias = str | Path | PathLike[str]

StreamOrPath: TypeAlias = TextIO | Pathish
