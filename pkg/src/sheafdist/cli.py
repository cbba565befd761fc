"""Command line surface.

Exit codes: 0 on success (an infinite distance is still success, printed
as ``inf``), 1 on domain errors, 2 on I/O, parse and usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from .barcode import Barcode, format_barcode, global_sections, parse_barcode
from .convolve import convolve_barcode
from .homs import hom_dim
from .intervals import DEFAULT_TOL, INF, ParseError, fmt_number, parse_graded_interval
from .interpolate import interpolate, same_component
from .matching import distance_with_matching
from .persistence import from_persistence, parse_diagrams


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--tol",
        type=float,
        default=None,
        help="absolute comparison tolerance (default: $SHEAFDIST_TOL or 1e-9)",
    )
    parser = argparse.ArgumentParser(
        prog="sheafdist",
        description="graded barcodes on the line: distances, matchings, smoothing",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check a .gbc file")
    p.add_argument("barcode")

    p = sub.add_parser("dist", parents=[common], help="bottleneck distance of two .gbc files")
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("match", parents=[common], help="distance plus an optimal matching")
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("convolve", parents=[common], help="smooth a barcode, print .gbc")
    p.add_argument("barcode")
    p.add_argument("--eps", type=float, required=True)

    p = sub.add_parser("interpolate", parents=[common], help="barcode at time t between two files")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--t", type=float, required=True)

    p = sub.add_parser("hom", parents=[common], help="morphism dimension between graded bars")
    p.add_argument("source", help='graded interval literal, e.g. "[0,1]@0"')
    p.add_argument("target")

    p = sub.add_parser("gamma", parents=[common], help="graded global section dimensions")
    p.add_argument("barcode")
    p.add_argument("--compact", action="store_true", help="compactly supported sections")

    p = sub.add_parser("component", parents=[common], help="same connected component?")
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("import-diagram", parents=[common], help="convert a .pdg file to .gbc")
    p.add_argument("diagram")
    p.add_argument("--side", choices=("R", "L"), required=True)

    return parser


def _tolerance(args: argparse.Namespace) -> float:
    if args.tol is not None:
        return args.tol
    env = os.environ.get("SHEAFDIST_TOL")
    return float(env) if env else DEFAULT_TOL


def _load(path: str, tol: float) -> Barcode:
    with open(path, encoding="utf-8") as fh:
        return parse_barcode(fh.read(), tol=tol)


def _fmt_value(x: float) -> str:
    return fmt_number(x)


def _run(args: argparse.Namespace) -> int:
    tol = _tolerance(args)

    if args.command == "validate":
        b = _load(args.barcode, tol)
        print(f"OK {len(b)} bars")
        return 0

    if args.command == "dist":
        value, _ = distance_with_matching(_load(args.left, tol), _load(args.right, tol))
        print(_fmt_value(value))
        return 0

    if args.command == "match":
        value, matching = distance_with_matching(_load(args.left, tol), _load(args.right, tol))
        print(_fmt_value(value))
        if value == INF:
            return 0
        for m, l, r, c in matching.central_pairs:
            print(f"C {m} {l} {r} {_fmt_value(c)}")
        for side, j, l, r, c in matching.halfopen_pairs:
            print(f"{side} {j} {l} {r} {_fmt_value(c)}")
        for side, j, origin, bar, c in matching.deletions:
            left = str(bar) if origin == "left" else "DELETED"
            right = str(bar) if origin == "right" else "DELETED"
            print(f"{side} {j} {left} {right} {_fmt_value(c)}")
        return 0

    if args.command == "convolve":
        sys.stdout.write(format_barcode(convolve_barcode(_load(args.barcode, tol), args.eps)))
        return 0

    if args.command == "interpolate":
        F, G = _load(args.left, tol), _load(args.right, tol)
        value, matching = distance_with_matching(F, G)
        sys.stdout.write(format_barcode(interpolate(F, G, matching, args.t)))
        return 0

    if args.command == "hom":
        src = parse_graded_interval(args.source)
        tgt = parse_graded_interval(args.target)
        print(hom_dim(src, tgt))
        return 0

    if args.command == "gamma":
        dims = global_sections(_load(args.barcode, tol), compact_support=args.compact)
        for degree, dim in dims.items():
            print(f"{degree} {dim}")
        return 0

    if args.command == "component":
        print("true" if same_component(_load(args.left, tol), _load(args.right, tol)) else "false")
        return 0

    if args.command == "import-diagram":
        with open(args.diagram, encoding="utf-8") as fh:
            diagrams = parse_diagrams(fh.read())
        bars = [g for d in diagrams for g in from_persistence(d, args.side)]
        sys.stdout.write(format_barcode(Barcode(tuple(bars))))
        return 0

    raise AssertionError(f"unhandled command {args.command}")


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _run(args)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
