"""Plain-text matrix files.

Format: any number of full-line comments starting with ``#``, then a header
line ``m n``, then ``m`` lines of ``n`` whitespace-separated decimal numbers.
Blank lines are ignored.  The writer emits 17 significant digits, which
round-trips float64 values exactly.
"""

from __future__ import annotations

import os

import numpy as np

from .errors import MatrixFormatError

__all__ = [
    "parse_matrix",
    "read_matrix",
    "read_vector",
    "format_matrix",
    "write_matrix",
]


def parse_matrix(text: str, name: str = "<matrix>") -> np.ndarray:
    rows_needed = cols_needed = None
    rows: list[list[float]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if rows_needed is None:
            if len(tokens) != 2:
                raise MatrixFormatError(
                    f"{name}:{lineno}: header must be 'm n', got {raw!r}"
                )
            try:
                rows_needed, cols_needed = int(tokens[0]), int(tokens[1])
            except ValueError as exc:
                raise MatrixFormatError(f"{name}:{lineno}: bad header {raw!r}") from exc
            if rows_needed < 1 or cols_needed < 1:
                raise MatrixFormatError(
                    f"{name}:{lineno}: dimensions must be positive, got {rows_needed} {cols_needed}"
                )
            continue
        if len(rows) == rows_needed:
            raise MatrixFormatError(f"{name}:{lineno}: more than {rows_needed} data rows")
        if len(tokens) != cols_needed:
            raise MatrixFormatError(
                f"{name}:{lineno}: expected {cols_needed} values, got {len(tokens)}"
            )
        try:
            row = [float(t) for t in tokens]
        except ValueError as exc:
            raise MatrixFormatError(f"{name}:{lineno}: unparseable number in {raw!r}") from exc
        if not all(np.isfinite(row)):
            raise MatrixFormatError(f"{name}:{lineno}: non-finite value")
        rows.append(row)
    if rows_needed is None:
        raise MatrixFormatError(f"{name}: no header line found")
    if len(rows) != rows_needed:
        raise MatrixFormatError(
            f"{name}: header promises {rows_needed} rows, found {len(rows)}"
        )
    return np.array(rows, dtype=float)


def read_matrix(path) -> np.ndarray:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_matrix(fh.read(), name=os.fspath(path))


def read_vector(path) -> np.ndarray:
    """Read a matrix file whose shape is m x 1 or 1 x n and flatten it."""
    m = read_matrix(path)
    if 1 not in m.shape:
        raise MatrixFormatError(f"{os.fspath(path)}: expected a vector, got shape {m.shape}")
    return m.reshape(-1)


def format_matrix(a, comments=()) -> str:
    a = np.asarray(a, dtype=float)
    if a.ndim == 1:
        a = a.reshape(-1, 1)
    lines = [f"# {c}" for c in comments]
    lines.append(f"{a.shape[0]} {a.shape[1]}")
    for row in a:
        lines.append(" ".join(f"{x:.17g}" for x in row))
    return "\n".join(lines) + "\n"


def write_matrix(path, a, comments=()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_matrix(a, comments=comments))
