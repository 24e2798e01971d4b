"""Command-line entry point.

Two ways to invoke::

    figgen --spec figures.yaml
    figgen --kind density --input run/density.bin --output density.png \
           --cone-R 5 --cone-c 1

Exit codes: 0 success, 1 bad spec or usage, 2 unreadable or malformed
input artifacts. Errors go to stderr, written paths to stdout.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .errors import InputError, SpecError
from .render import render
from .spec import KINDS, ConeOverlay, FigureSpec, load_spec_file


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="figgen",
        description="Render figures from sncausal CSV/binary artifacts.",
    )
    parser.add_argument("--version", action="version", version=f"figgen {__version__}")
    parser.add_argument("--spec", metavar="FILE", help="YAML figure spec file")
    parser.add_argument("--kind", choices=KINDS)
    parser.add_argument(
        "--input", action="append", default=None, metavar="PATH",
        help="input artifact; repeat for curve families",
    )
    parser.add_argument("--output", metavar="PATH")
    parser.add_argument("--cone-R", type=float, default=None, metavar="R")
    parser.add_argument("--cone-c", type=float, default=1.0, metavar="C")
    parser.add_argument("--floor", type=float, default=None)
    parser.add_argument("--cmap", default=None)
    parser.add_argument("--dpi", type=int, default=None)
    parser.add_argument("--title", default=None)
    parser.add_argument("--yscale", choices=("linear", "log"), default=None)
    return parser


def _specs_from_args(args: argparse.Namespace) -> list[FigureSpec]:
    if args.spec is not None:
        flag_mode = args.kind or args.input or args.output
        if flag_mode:
            raise SpecError("--spec cannot be combined with --kind/--input/--output")
        return load_spec_file(args.spec)
    if not (args.kind and args.input and args.output):
        raise SpecError("need either --spec or all of --kind, --input, --output")
    cone = None
    if args.cone_R is not None:
        cone = ConeOverlay(radius=args.cone_R, speed=args.cone_c)
    kwargs = {}
    if args.floor is not None:
        kwargs["floor"] = args.floor
    if args.dpi is not None:
        kwargs["dpi"] = args.dpi
    for key in ("cmap", "title", "yscale"):
        value = getattr(args, key)
        if value is not None:
            kwargs[key] = value
    return [
        FigureSpec(
            kind=args.kind, inputs=tuple(args.input), output=args.output,
            cone=cone, **kwargs,
        )
    ]


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; fold those into the config code
        raise SystemExit(0 if exc.code in (0, None) else 1) from None
    try:
        for spec in _specs_from_args(args):
            out = render(spec)
            print(f"wrote {out}")
    except SpecError as exc:
        print(f"figgen: error: {exc}", file=sys.stderr)
        return 1
    except InputError as exc:
        print(f"figgen: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
