"""Figure specs: what to draw, from which files, into which image.

A spec can come from keyword arguments, a plain mapping, or a YAML file
holding one mapping or a list of them. Validation happens eagerly at
construction; rendering assumes a well-formed spec.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import yaml

from .errors import SpecError

KINDS = (
    "density",
    "density-log",
    "M-curves",
    "Mtilde-heatmap",
    "delta-phase",
    "profiles",
)

# Kinds that draw rho(t, x) and therefore admit a light-cone overlay.
DENSITY_KINDS = ("density", "density-log")

# input arity per kind: (min, max); None = unbounded. Only the curve-family
# plot takes several files (one per run) -- everything else is one table.
_ARITY = {
    "density": (1, 1),
    "density-log": (1, 1),
    "M-curves": (1, None),
    "Mtilde-heatmap": (1, 1),
    "delta-phase": (1, 1),
    "profiles": (1, 1),
}


@dataclass(frozen=True)
class ConeOverlay:
    """Light-cone boundary x = +/-(R + c t) drawn over a density plot."""

    radius: float
    speed: float = 1.0

    def __post_init__(self) -> None:
        if not (self.radius >= 0.0):
            raise SpecError(f"cone radius must be nonnegative, got {self.radius}")
        if not (0.0 < self.speed < float("inf")):
            raise SpecError(f"cone speed must be positive and finite, got {self.speed}")


@dataclass(frozen=True)
class FigureSpec:
    """One figure: kind, input artifact(s), output image, and styling."""

    kind: str
    inputs: tuple[Path, ...]
    output: Path
    cone: ConeOverlay | None = None
    floor: float = 1e-12
    cmap: str | None = None
    dpi: int = 150
    title: str | None = None
    yscale: str | None = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise SpecError(f"unknown figure kind {self.kind!r} (choose from {KINDS})")
        object.__setattr__(self, "inputs", tuple(Path(p) for p in self.inputs))
        object.__setattr__(self, "output", Path(self.output))
        lo, hi = _ARITY[self.kind]
        if len(self.inputs) < lo or (hi is not None and len(self.inputs) > hi):
            bound = f"exactly {lo}" if hi == lo else f"at least {lo}"
            raise SpecError(
                f"kind {self.kind!r} takes {bound} input file(s), "
                f"got {len(self.inputs)}"
            )
        if self.cone is not None and self.kind not in DENSITY_KINDS:
            raise SpecError(
                f"cone overlay is only valid for {DENSITY_KINDS}, not {self.kind!r}"
            )
        if not (self.floor > 0.0):
            raise SpecError(f"floor must be positive, got {self.floor}")
        if isinstance(self.dpi, bool) or not isinstance(self.dpi, int) or self.dpi < 1:
            raise SpecError(f"dpi must be a positive integer, got {self.dpi!r}")
        if self.output.suffix.lower() != ".png":
            raise SpecError(f"output must be a .png path, got {self.output}")
        if self.yscale is not None:
            if self.kind != "M-curves":
                raise SpecError("yscale only applies to M-curves")
            if self.yscale not in ("linear", "log"):
                raise SpecError(f"yscale must be linear|log, got {self.yscale!r}")


_SPEC_KEYS = {
    "kind", "inputs", "input", "output", "cone", "floor", "cmap", "dpi",
    "title", "yscale",
}


def spec_from_mapping(mapping: dict, base: Path | None = None) -> FigureSpec:
    """Build a spec from a plain mapping (one YAML document entry).

    Relative paths are resolved against ``base`` (the spec file's directory)
    so spec files can live next to their artifacts.
    """
    if not isinstance(mapping, dict):
        raise SpecError(f"figure entry must be a mapping, got {type(mapping).__name__}")
    unknown = sorted(set(mapping) - _SPEC_KEYS)
    if unknown:
        raise SpecError(f"unknown spec keys: {', '.join(unknown)}")
    if "inputs" in mapping and "input" in mapping:
        raise SpecError("give either 'input' or 'inputs', not both")
    raw_inputs = mapping.get("inputs", mapping.get("input"))
    if raw_inputs is None:
        raise SpecError("spec needs an 'input' (or 'inputs') entry")
    if isinstance(raw_inputs, (str, Path)):
        raw_inputs = [raw_inputs]
    if "kind" not in mapping:
        raise SpecError("spec needs a 'kind' entry")
    if "output" not in mapping:
        raise SpecError("spec needs an 'output' entry")

    def _resolve(p) -> Path:
        p = Path(p)
        return p if p.is_absolute() or base is None else base / p

    cone = None
    raw_cone = mapping.get("cone")
    if raw_cone is not None:
        if not isinstance(raw_cone, dict) or not set(raw_cone) <= {"R", "c"}:
            raise SpecError("cone must be a mapping with keys R and optionally c")
        if "R" not in raw_cone:
            raise SpecError("cone needs an 'R' entry")
        cone = ConeOverlay(radius=float(raw_cone["R"]), speed=float(raw_cone.get("c", 1.0)))

    kwargs = {}
    if "floor" in mapping:
        kwargs["floor"] = float(mapping["floor"])
    if "dpi" in mapping:
        kwargs["dpi"] = mapping["dpi"]
    for key in ("cmap", "title", "yscale"):
        if key in mapping:
            kwargs[key] = mapping[key]
    return FigureSpec(
        kind=mapping["kind"],
        inputs=tuple(_resolve(p) for p in raw_inputs),
        output=_resolve(mapping["output"]),
        cone=cone,
        **kwargs,
    )


def load_spec_file(path: str | Path) -> list[FigureSpec]:
    """Load a YAML spec file: one figure mapping or a list of them."""
    path = Path(path)
    try:
        doc = yaml.safe_load(path.read_text())
    except OSError as exc:
        raise SpecError(f"{path}: cannot read ({exc})") from exc
    except yaml.YAMLError as exc:
        raise SpecError(f"{path}: invalid YAML ({exc})") from exc
    if doc is None:
        raise SpecError(f"{path}: empty spec file")
    entries = doc if isinstance(doc, list) else [doc]
    return [spec_from_mapping(entry, base=path.parent) for entry in entries]
