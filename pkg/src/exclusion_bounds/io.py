"""Readers for density and potential CSV files.

Density files have the header ``x,rho`` and one row per cell centre, with
uniformly spaced, increasing centres. Potential files have the header
``x,V`` (1D samples) or ``x,y,V`` (2D samples on a uniform grid in
row-major order).
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .density import DensityProfile
from .errors import DomainError, InputFormatError


def _read_rows(source, header):
    """Parse a CSV with the exact ``header``; returns a float array of shape (rows, cols)."""
    if isinstance(source, (str, Path)):
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as exc:
            raise InputFormatError(f"cannot read {source}: {exc}") from exc
    else:
        text = source.read()
    reader = csv.reader(io.StringIO(text))
    rows = [r for r in reader if r and any(c.strip() for c in r)]
    if not rows:
        raise InputFormatError("empty file")
    got = [c.strip() for c in rows[0]]
    if got not in header:
        raise InputFormatError(f"expected header {' or '.join(','.join(h) for h in header)}, "
                               f"got {','.join(got)}")
    ncol = len(got)
    body = rows[1:]
    if not body:
        raise InputFormatError("no data rows")
    out = np.empty((len(body), ncol))
    for i, r in enumerate(body, start=2):
        if len(r) != ncol:
            raise InputFormatError(f"line {i}: expected {ncol} fields, got {len(r)}")
        try:
            out[i - 2] = [float(c) for c in r]
        except ValueError as exc:
            raise InputFormatError(f"line {i}: {exc}") from exc
    if not np.all(np.isfinite(out)):
        raise InputFormatError("non-finite value in data")
    return got, out


def read_density_csv(source):
    """Read a ``x,rho`` file into a :class:`DensityProfile`.

    Raises
    ------
    InputFormatError
        For an empty or malformed file, negative densities or non-uniform
        cell centres.
    """
    _, data = _read_rows(source, [["x", "rho"]])
    if np.any(data[:, 1] < 0):
        raise InputFormatError("negative density value")
    try:
        return DensityProfile.from_centers(data[:, 0], data[:, 1])
    except DomainError as exc:
        raise InputFormatError(str(exc)) from exc


@dataclass(frozen=True)
class PotentialSamples:
    """Potential samples read from CSV.

    ``dim == 1``: ``x`` and ``V`` are 1D. ``dim == 2``: ``V`` has shape
    ``(len(y), len(x))`` and ``cell`` is the area per sample.
    """

    dim: int
    x: np.ndarray
    y: np.ndarray | None
    V: np.ndarray
    cell: float


def _uniform_step(t, name):
    d = np.diff(t)
    if t.size < 2 or np.any(d <= 0):
        raise InputFormatError(f"{name} must be strictly increasing with at least two values")
    h = (t[-1] - t[0]) / (t.size - 1)
    if np.any(np.abs(d - h) > 1e-9 * max(abs(h), 1.0)):
        raise InputFormatError(f"{name} must be uniformly spaced")
    return float(h)


def read_potential_csv(source):
    """Read a ``x,V`` or ``x,y,V`` file into :class:`PotentialSamples`."""
    header, data = _read_rows(source, [["x", "V"], ["x", "y", "V"]])
    if len(header) == 2:
        x = data[:, 0]
        h = _uniform_step(x, "x")
        return PotentialSamples(1, x, None, data[:, 1].copy(), h)
    x_all, y_all, V = data[:, 0], data[:, 1], data[:, 2]
    # row-major: y outer, x inner
    nx = int(np.argmax(y_all != y_all[0])) if np.any(y_all != y_all[0]) else y_all.size
    if nx == 0 or y_all.size % nx:
        raise InputFormatError("2D samples must form a complete row-major grid")
    ny = y_all.size // nx
    X = x_all.reshape(ny, nx)
    Y = y_all.reshape(ny, nx)
    if np.any(X != X[0]) or np.any(Y != Y[:, :1]):
        raise InputFormatError("2D samples must form a complete row-major grid")
    hx = _uniform_step(X[0], "x")
    hy = _uniform_step(Y[:, 0], "y")
    return PotentialSamples(2, X[0].copy(), Y[:, 0].copy(), V.reshape(ny, nx).copy(), hx * hy)
