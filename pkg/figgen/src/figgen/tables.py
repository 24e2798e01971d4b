"""Readers for the solver's artifact files.

figgen talks to the solver exclusively through files (CSV tables plus the
binary snapshot container), so the parsers are reimplemented here from the
file contract rather than imported from the solver package.
"""

from __future__ import annotations

import csv
import struct
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import InputError

DENSITY_MAGIC = b"SNRHO1\x00\x00"

DENSITY_COLUMNS = ("t", "x", "rho")
LEAKS_COLUMNS = ("t", "R", "M")
SWEEP_COLUMNS = ("kappa", "R", "M_tilde", "delta", "E_kin", "E_int", "converged")
PROFILE_COLUMNS = ("kappa", "x", "rho")


def read_table(path: str | Path, columns: tuple[str, ...]) -> dict[str, np.ndarray]:
    """Parse a CSV table into float columns.

    All of ``columns`` must be present (extra columns are tolerated and
    ignored); a header-only file counts as empty. Errors carry the path and
    the offending columns so batch runs fail with a usable message.
    """
    path = Path(path)
    try:
        fh = path.open(newline="")
    except OSError as exc:
        raise InputError(f"{path}: cannot read ({exc})") from exc
    with fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise InputError(f"{path}: empty file") from None
        except (UnicodeDecodeError, csv.Error):
            raise InputError(f"{path}: not a CSV table") from None
        missing = [c for c in columns if c not in header]
        if missing:
            raise InputError(
                f"{path}: missing columns {', '.join(missing)} "
                f"(found {', '.join(header)})"
            )
        index = [header.index(c) for c in columns]
        rows = []
        try:
            for lineno, row in enumerate(reader, start=2):
                if not row:
                    continue
                try:
                    rows.append([float(row[i]) for i in index])
                except (ValueError, IndexError):
                    raise InputError(f"{path}: line {lineno}: malformed row") from None
        except (UnicodeDecodeError, csv.Error):
            raise InputError(f"{path}: not a CSV table") from None
    if not rows:
        raise InputError(f"{path}: no data rows")
    data = np.asarray(rows, dtype=float)
    return {name: data[:, k] for k, name in enumerate(columns)}


def read_leaks(path: str | Path) -> dict[str, np.ndarray]:
    return read_table(path, LEAKS_COLUMNS)


def read_sweep(path: str | Path) -> dict[str, np.ndarray]:
    return read_table(path, SWEEP_COLUMNS)


def read_profiles(path: str | Path) -> dict[str, np.ndarray]:
    return read_table(path, PROFILE_COLUMNS)


# ---------------------------------------------------------------------------
# density snapshot stacks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DensityGrid:
    """Snapshot stack rho(t, x) on a uniform spatial grid."""

    times: np.ndarray  # (n_t,)
    x: np.ndarray  # (n_x,)
    rho: np.ndarray  # (n_t, n_x)


def read_density(path: str | Path) -> DensityGrid:
    """Load snapshots from either container, sniffing the binary magic."""
    path = Path(path)
    try:
        with path.open("rb") as fh:
            head = fh.read(len(DENSITY_MAGIC))
    except OSError as exc:
        raise InputError(f"{path}: cannot read ({exc})") from exc
    if head == DENSITY_MAGIC:
        return _read_density_bin(path)
    return _read_density_csv(path)


def _read_density_bin(path: Path) -> DensityGrid:
    # Layout: 8-byte magic, <u4 n_t, <u4 n_x, <f8 dx, 8 reserved bytes,
    # then n_t times and the n_t*n_x density matrix, all little-endian f8.
    blob = path.read_bytes()
    if len(blob) < 32:
        raise InputError(f"{path}: truncated header")
    n_t, n_x, dx = struct.unpack("<IId8x", blob[8:32])
    expected = 32 + 8 * n_t + 8 * n_t * n_x
    if len(blob) != expected:
        raise InputError(
            f"{path}: truncated payload ({len(blob)} bytes, expected {expected})"
        )
    if n_t == 0 or n_x == 0:
        raise InputError(f"{path}: no snapshots")
    times = np.frombuffer(blob, dtype="<f8", count=n_t, offset=32).copy()
    rho = (
        np.frombuffer(blob, dtype="<f8", count=n_t * n_x, offset=32 + 8 * n_t)
        .reshape(n_t, n_x)
        .copy()
    )
    x = (np.arange(n_x) - n_x // 2) * dx
    return DensityGrid(times=times, x=x, rho=rho)


def _read_density_csv(path: Path) -> DensityGrid:
    tab = read_table(path, DENSITY_COLUMNS)
    t, x, rho = tab["t"], tab["x"], tab["rho"]
    changes = np.flatnonzero(np.diff(t) != 0) + 1
    n_x = int(changes[0]) if changes.size else len(t)
    if len(t) % n_x != 0:
        raise InputError(f"{path}: snapshots have unequal lengths")
    n_t = len(t) // n_x
    times = t[::n_x]
    if not np.array_equal(np.repeat(times, n_x), t):
        raise InputError(f"{path}: snapshots have unequal lengths")
    x_first = x[:n_x]
    if not np.array_equal(np.tile(x_first, n_t), x):
        raise InputError(f"{path}: x grid differs between snapshots")
    return DensityGrid(
        times=times.copy(), x=x_first.copy(), rho=rho.reshape(n_t, n_x).copy()
    )


def pivot_sweep(
    table: dict[str, np.ndarray], value: str
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Pivot a long (kappa, R) table onto a value grid, NaN where absent.

    Rows flagged unconverged are left as NaN so heatmaps show holes instead
    of stale numbers.
    """
    kappas = np.unique(table["kappa"])
    radii = np.unique(table["R"])
    grid = np.full((radii.size, kappas.size), np.nan)
    converged = table.get("converged")
    for row in range(table["kappa"].size):
        if converged is not None and not converged[row]:
            continue
        i = int(np.searchsorted(radii, table["R"][row]))
        j = int(np.searchsorted(kappas, table["kappa"][row]))
        grid[i, j] = table[value][row]
    return kappas, radii, grid
