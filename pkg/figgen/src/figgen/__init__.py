"""figgen: publication figures from sncausal artifact files.

Six figure kinds: density heatmaps (linear and log color scale, optional
light-cone overlay), M(t, R) curve families, the peak-leakage heatmap over
(kappa, R), the binding-ratio phase diagram, and ground-state profiles.
"""

__version__ = "0.1.0"

from .errors import FiggenError, InputError, SpecError
from .render import build_figure, render
from .spec import DENSITY_KINDS, KINDS, ConeOverlay, FigureSpec, load_spec_file, spec_from_mapping
from .tables import DensityGrid, pivot_sweep, read_density, read_leaks, read_profiles, read_sweep

__all__ = [
    "ConeOverlay",
    "DENSITY_KINDS",
    "DensityGrid",
    "FiggenError",
    "FigureSpec",
    "InputError",
    "KINDS",
    "SpecError",
    "build_figure",
    "load_spec_file",
    "pivot_sweep",
    "read_density",
    "read_leaks",
    "read_profiles",
    "read_sweep",
    "render",
    "spec_from_mapping",
]
