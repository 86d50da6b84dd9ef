"""Command-line interface.

Subcommands
-----------
* ``table``    -- CSV of (p, h, orthoscheme volume, hyperball piece, density)
                  for a list of p values (``--p 7,8,9`` and/or
                  ``--p-range lo:hi:step``).
* ``curve``    -- CSV of (p, density) on an equally spaced grid, for plotting
                  the density curve (``--from/--to/--samples``).
* ``optimize`` -- golden-section search for the density maximum.
* ``volume``   -- per-p geometry report: height, volumes, areas.
* ``lob``      -- evaluate the Lobachevsky function at one point.

Data goes to standard output (or ``--out <path>``); diagnostics go to the
standard error stream.  Exit codes: 0 success, 2 invalid arguments,
3 numerical failure.  All computation is full double precision; rounding to
``--precision`` decimals happens only at the formatting layer.
"""

import argparse
import math
import sys
from dataclasses import dataclass

import numpy as np

from .density import simplex_density
from .errors import (
    ConvergenceError,
    DomainError,
    InvalidInputError,
    SingularMatrixError,
)
from .lobachevsky import lob
from .optimize import find_optimal_p
from .orthoscheme import tetra_geometry

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3


@dataclass(frozen=True)
class CliConfig:
    """Output precision, optimizer tolerance, and destination path."""

    precision: int = 5
    tol: float = 1e-7
    output_path: str | None = None

    def __post_init__(self):
        if not 1 <= self.precision <= 15:
            raise InvalidInputError(
                f"precision must lie in [1, 15], got {self.precision}"
            )
        if not self.tol > 0.0:
            raise InvalidInputError(f"tol must be positive, got {self.tol}")


def _fmt(value: float, precision: int) -> str:
    return f"{value:.{precision}f}"


def _fmt_p(p: float) -> str:
    return f"{p:.12g}"


def cmd_table(p_list, config: CliConfig) -> str:
    """CSV packing table, one row per requested p, in input order."""
    for p in p_list:
        if not p > 6.0:
            raise InvalidInputError(f"p must exceed 6, got {_fmt_p(p)}")
    lines = ["p,h,vol_orthoscheme,vol_hyperball_piece,density"]
    for p in p_list:
        row = simplex_density(p)
        lines.append(
            ",".join(
                (
                    _fmt_p(p),
                    _fmt(row.h, config.precision),
                    _fmt(row.vol_orthoscheme, config.precision),
                    _fmt(row.vol_piece, config.precision),
                    _fmt(row.delta, config.precision),
                )
            )
        )
    return "\n".join(lines) + "\n"


def cmd_curve(p_from: float, p_to: float, samples: int, config: CliConfig) -> str:
    """CSV density curve on an inclusive, equally spaced grid."""
    if not (6.0 < p_from < p_to):
        raise InvalidInputError(
            f"need 6 < from < to, got from={_fmt_p(p_from)}, to={_fmt_p(p_to)}"
        )
    if samples < 2:
        raise InvalidInputError(f"samples must be at least 2, got {samples}")
    lines = ["p,density"]
    for p in np.linspace(p_from, p_to, samples):
        lines.append(
            f"{_fmt_p(float(p))},{_fmt(simplex_density(float(p)).delta, config.precision)}"
        )
    return "\n".join(lines) + "\n"


def cmd_optimize(config: CliConfig) -> str:
    """One-line report of the density maximum."""
    result = find_optimal_p(config.tol)
    return (
        f"p_opt={_fmt(result.p_opt, config.precision)} "
        f"delta_opt={_fmt(result.delta_opt, config.precision)} "
        f"iterations={result.iterations}\n"
    )


def cmd_volume(p: float, config: CliConfig) -> str:
    """Key=value geometry report for a single p."""
    if not p > 6.0:
        raise InvalidInputError(f"p must exceed 6, got {_fmt_p(p)}")
    geo = tetra_geometry(p)
    n = config.precision
    return (
        f"p={_fmt_p(p)}\n"
        f"h={_fmt(geo.h, n)}\n"
        f"vol_orthoscheme={_fmt(geo.vol_orthoscheme, n)}\n"
        f"vol_tetra={_fmt(geo.vol_tetra, n)}\n"
        f"tri_area={_fmt(geo.tri_area, n)}\n"
        f"hexagon_area={_fmt(geo.hexagon_area, n)}\n"
        f"surface_area={_fmt(geo.surface_area, n)}\n"
        f"omega={_fmt(geo.omega, n)}\n"
    )


def cmd_lob(x: float, config: CliConfig) -> str:
    """Lobachevsky function value at x."""
    if not math.isfinite(x):
        raise InvalidInputError(f"argument must be finite, got {x}")
    return _fmt(lob(x), config.precision) + "\n"


def _parse_p_list(text: str):
    try:
        return [float(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad p list {text!r}: {exc}")


def _parse_p_range(text: str):
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(
            f"bad range {text!r}: expected lo:hi:step"
        )
    try:
        lo, hi, step = (float(tok) for tok in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad range {text!r}: {exc}")
    if step <= 0.0 or hi < lo:
        raise argparse.ArgumentTypeError(
            f"bad range {text!r}: need lo <= hi and step > 0"
        )
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return [lo + k * step for k in range(count)]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperball",
        description=(
            "Hyperball packing densities in regular truncated tetrahedra "
            "of hyperbolic 3-space."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument(
            "--precision",
            type=int,
            default=5,
            help="output decimals, 1..15 (default 5)",
        )
        p.add_argument(
            "--out",
            default=None,
            metavar="PATH",
            help="write output to PATH instead of standard output",
        )

    p_table = sub.add_parser(
        "table", help="CSV packing table for a list of p values"
    )
    p_table.add_argument(
        "--p",
        type=_parse_p_list,
        default=None,
        metavar="LIST",
        help="comma-separated p values, e.g. 7,8,9",
    )
    p_table.add_argument(
        "--p-range",
        type=_parse_p_range,
        default=None,
        metavar="LO:HI:STEP",
        help="arithmetic sweep appended after --p values",
    )
    add_common(p_table)

    p_curve = sub.add_parser(
        "curve", help="CSV density curve on an equally spaced grid"
    )
    p_curve.add_argument(
        "--from", dest="p_from", type=float, required=True, metavar="P"
    )
    p_curve.add_argument(
        "--to", dest="p_to", type=float, required=True, metavar="P"
    )
    p_curve.add_argument("--samples", type=int, required=True, metavar="N")
    add_common(p_curve)

    p_opt = sub.add_parser("optimize", help="locate the density maximum")
    p_opt.add_argument(
        "--tol",
        type=float,
        default=1e-7,
        help="bracket tolerance in p (default 1e-7)",
    )
    add_common(p_opt)

    p_vol = sub.add_parser("volume", help="geometry report for one p")
    p_vol.add_argument("--p", type=float, required=True)
    add_common(p_vol)

    p_lob = sub.add_parser("lob", help="evaluate the Lobachevsky function")
    p_lob.add_argument("x", type=float)
    add_common(p_lob)

    return parser


def _dispatch(args: argparse.Namespace) -> str:
    config = CliConfig(
        precision=args.precision,
        tol=getattr(args, "tol", 1e-7),
        output_path=args.out,
    )
    if args.command == "table":
        p_list = list(args.p or []) + list(args.p_range or [])
        return cmd_table(p_list, config)
    if args.command == "curve":
        return cmd_curve(args.p_from, args.p_to, args.samples, config)
    if args.command == "optimize":
        return cmd_optimize(config)
    if args.command == "volume":
        return cmd_volume(args.p, config)
    if args.command == "lob":
        return cmd_lob(args.x, config)
    raise InvalidInputError(f"unknown command {args.command!r}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = _dispatch(args)
    except (InvalidInputError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConvergenceError, SingularMatrixError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
