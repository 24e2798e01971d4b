"""Synthetic artifact fixtures shared by the figgen tests.

Everything is written by hand against the file contracts (headers, binary
layout) rather than produced by the solver, so these tests stand alone.
"""

from __future__ import annotations

import csv
import struct
from pathlib import Path

import numpy as np
import pytest

DENSITY_MAGIC = b"SNRHO1\x00\x00"


def write_csv(path: Path, header, rows) -> Path:
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)
    return path


def make_density_blob(times: np.ndarray, rho: np.ndarray, dx: float) -> bytes:
    n_t, n_x = rho.shape
    header = DENSITY_MAGIC + struct.pack("<IId8x", n_t, n_x, dx)
    return (
        header
        + np.asarray(times, dtype="<f8").tobytes()
        + np.ascontiguousarray(rho, dtype="<f8").tobytes()
    )


@pytest.fixture
def density_stack():
    """A tiny 3-snapshot stack on an 8-point grid, dx = 0.5."""
    times = np.array([0.0, 0.4, 0.8])
    x = (np.arange(8) - 4) * 0.5
    rho = np.exp(-(x[None, :] ** 2) / (1.0 + times[:, None]))
    return times, x, rho


@pytest.fixture
def density_bin(tmp_path, density_stack) -> Path:
    times, _, rho = density_stack
    path = tmp_path / "density.bin"
    path.write_bytes(make_density_blob(times, rho, 0.5))
    return path


@pytest.fixture
def density_csv(tmp_path, density_stack) -> Path:
    times, x, rho = density_stack
    rows = [
        [repr(float(t)), repr(float(xv)), repr(float(rho[i, j]))]
        for i, t in enumerate(times)
        for j, xv in enumerate(x)
    ]
    return write_csv(tmp_path / "density.csv", ("t", "x", "rho"), rows)


@pytest.fixture
def leaks_csv(tmp_path) -> Path:
    rows = []
    for radius in (1.0, 2.0):
        for k, t in enumerate((0.0, 0.5, 1.0, 1.5)):
            rows.append([t, radius, 1e-6 * (k + 1) / radius])
    return write_csv(tmp_path / "leaks.csv", ("t", "R", "M"), rows)


@pytest.fixture
def sweep_csv(tmp_path) -> Path:
    # 2x2 grid with one unconverged cell (NaN M_tilde, converged=0)
    rows = [
        [0.0, 1.0, 0.4, 0.0, 0.75, 0.0, 1],
        [0.0, 2.0, 0.1, 0.0, 0.25, 0.0, 1],
        [1.0, 1.0, 0.004, -1.5, 0.9, -1.35, 1],
        [1.0, 2.0, float("nan"), float("nan"), float("nan"), float("nan"), 0],
    ]
    return write_csv(
        tmp_path / "sweep.csv",
        ("kappa", "R", "M_tilde", "delta", "E_kin", "E_int", "converged"),
        rows,
    )


@pytest.fixture
def profiles_csv(tmp_path) -> Path:
    x = (np.arange(16) - 8) * 0.25
    rows = []
    for kappa in (0.0, 2.0):
        width = 1.0 / (1.0 + kappa)
        for xv in x:
            rows.append([kappa, xv, float(np.exp(-(xv / width) ** 2))])
    return write_csv(tmp_path / "profiles.csv", ("kappa", "x", "rho"), rows)
