"""Helper functions for file I/O operations."""

import io
import os
from pathlib import Path
from typing import IO

from .types import StreamOrPath


def ensure_text_stream(source: StreamOrPath, *, encoding: str = "utf-8") -> IO[str]:
    """
    Normalize input to a text stream.

    Accepts:
      - path-like (str/Path)
      - raw bytes/bytearray
      - text stream (IO[str]) -> returned as-is
      - binary stream (IO[bytes]) -> wrapped in TextIOWrapper
    """
    if isinstance(source, (str, Path, os.PathLike)):
        return open(os.fspath(source), "r", encoding=encoding)

    if isinstance(source, io.TextIOBase):
        return source

    if isinstance(source, (bytes, bytearray)):
        return io.TextIOWrapper(io.BytesIO(source), encoding=encoding)

    if isinstance(source, (io.BufferedIOBase, io.RawIOBase)):
        return io.TextIOWrapper(source, encoding=encoding)

    raise TypeError(f"Unsupported StreamOrPath type: {type(source)!r}")


def read_text(source: StreamOrPath, *, encoding: str = "utf-8") -> str:
    """Whole content of a path or stream; paths are closed after reading."""
    if isinstance(source, (str, Path, os.PathLike)):
        path = Path(source)
        if not path.is_file():
            raise FileNotFoundError(
                f"file {path.name} not found, please check the path."
            )
        return path.read_text(encoding=encoding)
    return ensure_text_stream(source, encoding=encoding).read()
