"""Reading and writing S-boxes as 16x16 text grids."""

from __future__ import annotations

import hashlib
from importlib import resources
from pathlib import Path

import numpy as np

GRID = 16


class SBoxFormatError(ValueError):
    pass


def parse_grid(text: str, hex: bool = False) -> np.ndarray:
    """Parse 16 rows of 16 values; blank lines and '#' comments are ignored."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != GRID:
            raise SBoxFormatError(f"line {lineno}: expected {GRID} values, got {len(tokens)}")
        try:
            vals = [int(t, 16) if hex else int(t, 10) for t in tokens]
        except ValueError as e:
            raise SBoxFormatError(f"line {lineno}: {e}") from None
        if any(v < 0 or v > 255 for v in vals):
            raise SBoxFormatError(f"line {lineno}: values must lie in [0, 255]")
        rows.append(vals)
    if len(rows) != GRID:
        raise SBoxFormatError(f"expected {GRID} rows, got {len(rows)}")
    return np.array(rows, dtype=np.int64).reshape(GRID * GRID)


def format_grid(s, hex: bool = False, comment: str | None = None) -> str:
    s = np.asarray(s).reshape(GRID, GRID)
    fmt = "{:02x}" if hex else "{:d}"
    lines = [f"# {comment}"] if comment else []
    lines += [" ".join(fmt.format(int(v)) for v in row) for row in s]
    return "\n".join(lines) + "\n"


def read_grid(path, hex: bool = False) -> np.ndarray:
    return parse_grid(Path(path).read_text(encoding="utf-8"), hex=hex)


def write_grid(path, s, hex: bool = False, comment: str | None = None) -> None:
    Path(path).write_text(format_grid(s, hex=hex, comment=comment), encoding="utf-8")


def published_text() -> str:
    return resources.files("tspsbox").joinpath("data/published_sbox.txt").read_text(encoding="utf-8")


def load_published_sbox() -> np.ndarray:
    """The published 8x8 S-box that the metrics are checked against."""
    return parse_grid(published_text())


def published_sha256() -> str:
    return hashlib.sha256(published_text().encode("utf-8")).hexdigest()
