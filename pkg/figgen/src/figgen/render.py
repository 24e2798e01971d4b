"""Figure builders, one per kind, funnelled through :func:`render`.

Rendering is deliberately boring: read the inputs, build a matplotlib
figure, save a PNG with fixed metadata. Identical inputs give byte-identical
files, and inputs are never written to.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)
import numpy as np  # noqa: E402
from matplotlib.figure import Figure  # noqa: E402

from . import tables  # noqa: E402
from .spec import FigureSpec  # noqa: E402

_DEFAULT_CMAP = {
    "density": "viridis",
    "density-log": "magma",
    "Mtilde-heatmap": "viridis",
    "delta-phase": "RdBu",
}

_DEFAULT_TITLE = {
    "density": "probability density",
    "density-log": "probability density (log color scale)",
    "M-curves": "cone leakage M(t, R)",
    "Mtilde-heatmap": "peak leakage M̃(κ, R)",
    "delta-phase": "binding ratio δ = E_int / E_kin",
    "profiles": "ground-state density profiles",
}


def _cell_edges(centers: np.ndarray) -> np.ndarray:
    """Midpoint cell edges for pcolormesh, degenerating gracefully at size 1."""
    c = np.asarray(centers, dtype=float)
    if c.size == 1:
        return np.array([c[0] - 0.5, c[0] + 0.5])
    mid = 0.5 * (c[1:] + c[:-1])
    first = c[0] - (mid[0] - c[0])
    last = c[-1] + (c[-1] - mid[-1])
    return np.concatenate([[first], mid, [last]])


def _cmap(spec: FigureSpec) -> str | None:
    return spec.cmap if spec.cmap is not None else _DEFAULT_CMAP.get(spec.kind)


def _finish(ax, spec: FigureSpec) -> None:
    ax.set_title(spec.title if spec.title is not None else _DEFAULT_TITLE[spec.kind])


def _density_figure(spec: FigureSpec) -> Figure:
    data = tables.read_density(spec.inputs[0])
    log_scale = spec.kind == "density-log"
    z = np.log10(np.maximum(data.rho, spec.floor)) if log_scale else data.rho
    x_edges = _cell_edges(data.x)
    t_edges = _cell_edges(data.times)

    fig, ax = plt.subplots(figsize=(7.2, 4.5), constrained_layout=True)
    mesh = ax.pcolormesh(x_edges, t_edges, z, cmap=_cmap(spec))
    label = (
        f"log10 density (clipped below {spec.floor:g})"
        if log_scale
        else "probability density"
    )
    fig.colorbar(mesh, ax=ax, label=label)
    ax.set_xlim(x_edges[0], x_edges[-1])
    ax.set_ylim(t_edges[0], t_edges[-1])
    if spec.cone is not None:
        t = data.times
        front = spec.cone.radius + spec.cone.speed * t
        ax.plot(front, t, color="white", linestyle="--", linewidth=1.2)
        ax.plot(-front, t, color="white", linestyle="--", linewidth=1.2)
        ax.text(
            0.02, 0.97,
            f"cone: R={spec.cone.radius:g}, c={spec.cone.speed:g}",
            transform=ax.transAxes, va="top", color="white", fontsize=8,
        )
    ax.set_xlabel("x")
    ax.set_ylabel("t")
    _finish(ax, spec)
    return fig


def _m_curves_figure(spec: FigureSpec) -> Figure:
    fig, ax = plt.subplots(figsize=(6.8, 4.4), constrained_layout=True)
    for path in spec.inputs:
        tab = tables.read_leaks(path)
        # label curves by the run directory when several files are compared
        stem = path.parent.name if len(spec.inputs) > 1 else None
        for radius in np.unique(tab["R"]):
            sel = tab["R"] == radius
            label = f"R={radius:g}" if stem is None else f"{stem}, R={radius:g}"
            ax.plot(tab["t"][sel], tab["M"][sel], label=label, linewidth=1.2)
    ax.set_yscale(spec.yscale or "log")
    ax.set_xlabel("t")
    ax.set_ylabel("M(t, R)")
    ax.legend(fontsize=8)
    _finish(ax, spec)
    return fig


def _sweep_grid(spec: FigureSpec, value: str):
    tab = tables.read_sweep(spec.inputs[0])
    return tables.pivot_sweep(tab, value)


def _mtilde_figure(spec: FigureSpec) -> Figure:
    kappas, radii, grid = _sweep_grid(spec, "M_tilde")
    z = np.ma.masked_invalid(np.log10(np.maximum(grid, spec.floor)))
    fig, ax = plt.subplots(figsize=(6.4, 4.8), constrained_layout=True)
    mesh = ax.pcolormesh(_cell_edges(kappas), _cell_edges(radii), z, cmap=_cmap(spec))
    fig.colorbar(mesh, ax=ax, label=f"log10 M̃ (clipped below {spec.floor:g})")
    ax.set_xlabel("κ")
    ax.set_ylabel("R")
    _finish(ax, spec)
    return fig


def _delta_phase_figure(spec: FigureSpec) -> Figure:
    kappas, radii, grid = _sweep_grid(spec, "delta")
    z = np.ma.masked_invalid(grid)
    span = float(np.nanmax(np.abs(grid))) if np.isfinite(grid).any() else 1.0
    span = max(span, 1.0)
    fig, ax = plt.subplots(figsize=(6.4, 4.8), constrained_layout=True)
    mesh = ax.pcolormesh(
        _cell_edges(kappas), _cell_edges(radii), z,
        cmap=_cmap(spec), vmin=-span, vmax=span,
    )
    fig.colorbar(mesh, ax=ax, label="δ = E_int / E_kin")
    if kappas.size >= 2 and radii.size >= 2:
        # |delta| = 1 separates the self-bound regime; dashes mark the border
        ax.contour(
            kappas, radii, np.abs(grid), levels=[1.0],
            colors="black", linestyles="--", linewidths=1.0,
        )
    ax.set_xlabel("κ")
    ax.set_ylabel("R")
    _finish(ax, spec)
    return fig


def _profiles_figure(spec: FigureSpec) -> Figure:
    tab = tables.read_profiles(spec.inputs[0])
    fig, ax = plt.subplots(figsize=(6.8, 4.4), constrained_layout=True)
    for kappa in np.unique(tab["kappa"]):
        sel = tab["kappa"] == kappa
        ax.plot(tab["x"][sel], tab["rho"][sel], label=f"κ={kappa:g}", linewidth=1.2)
    ax.set_xlabel("x")
    ax.set_ylabel("density")
    ax.legend(fontsize=8)
    _finish(ax, spec)
    return fig


_BUILDERS = {
    "density": _density_figure,
    "density-log": _density_figure,
    "M-curves": _m_curves_figure,
    "Mtilde-heatmap": _mtilde_figure,
    "delta-phase": _delta_phase_figure,
    "profiles": _profiles_figure,
}


def build_figure(spec: FigureSpec) -> Figure:
    """Read the spec's inputs and return the assembled matplotlib figure."""
    return _BUILDERS[spec.kind](spec)


def _png_metadata(spec: FigureSpec) -> dict[str, str]:
    # fixed strings only -- no timestamps -- so re-renders are byte-identical
    meta = {"Software": "figgen"}
    if spec.kind == "density-log":
        meta["Description"] = f"log-scale density, clip floor {spec.floor:g}"
    return meta


def render(spec: FigureSpec) -> Path:
    """Render the spec to its output PNG and return the written path."""
    fig = build_figure(spec)
    try:
        spec.output.parent.mkdir(parents=True, exist_ok=True)
        fig.savefig(spec.output, dpi=spec.dpi, metadata=_png_metadata(spec))
    finally:
        plt.close(fig)
    return spec.output
