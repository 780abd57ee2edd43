# Copyright 2023 Oliver Smith
# SPDX-License-Identifier: GPL-3.0-or-later
import argparse
from pathlib import Path
import sys
from typing import cast

from wreslab.core import Config
from wreslab.core.scalar import Mode
from wreslab.types import WreslabArgs

try:
    import argcomplete  # type:ignore[import-untyped]
except ImportError:
    pass

import wreslab
import wreslab.config
import wreslab.helpers.args

"""This file is about parsing command line arguments passed to wreslab, as
   well as generating the help pages (wreslab -h). All this is done with
   Python's argparse. Options that also live in the config file default to
   None here, so wreslab/helpers/args.py can tell whether they were given.

   See wreslab/helpers/args.py for more information about the args variable.
"""


def positive_int(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return number


def add_file_arg(subparser: argparse.ArgumentParser, dest: str, what: str) -> None:
    subparser.add_argument(dest, type=lambda x: Path(x), metavar=dest.upper(), help=f"{what} (JSON)")


def arguments_suite(sub: argparse._SubParsersAction) -> None:
    import wreslab.suites

    suite = sub.add_parser("suite", help="run a seeded verification suite and write its report")
    suite.add_argument(
        "action_suite",
        choices=list(wreslab.suites.SUITES),
        metavar="NAME",
        help="one of: " + ", ".join(wreslab.suites.SUITES),
    )
    defaults = wreslab.config.suite_defaults
    suite.add_argument(
        "-k", "--size", dest="size", type=positive_int, help=f"matrix size k (default: {defaults['k']})"
    )
    suite.add_argument(
        "--n-levels",
        dest="n_levels",
        type=positive_int,
        help=f"filtration levels N of the jet ring (default: {defaults['n_levels']})",
    )
    suite.add_argument(
        "--max-j",
        dest="max_j",
        type=positive_int,
        help=f"largest Fourier mode of random symbols (default: {defaults['max_j']})",
    )


def get_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wreslab")

    # Other
    parser.add_argument("-V", "--version", action="version", version=wreslab.__version__)
    parser.add_argument(
        "-c",
        "--config",
        dest="config",
        type=lambda x: Path(x),
        default=wreslab.config.defaults["config"],
        help="path to wreslab.cfg file (default in ~/.config/)",
    )
    parser.add_argument(
        "-w",
        "--work",
        type=lambda x: Path(x).absolute(),
        help="folder where logs and suite reports get stored",
    )
    parser.add_argument("-o", "--out", type=lambda x: Path(x), help="write the result to this file instead of stdout")

    # Arithmetic
    parser.add_argument("--mode", choices=Mode.choices(), help="exact Gaussian rationals or f64 complex floats")
    parser.add_argument(
        "--depth",
        type=int,
        help="compute symbols down to degree -DEPTH"
        f" (default: {Config.get_default('depth')})",
    )
    parser.add_argument(
        "--cap-j",
        dest="cap_j",
        type=positive_int,
        help="Fourier cap above which products are truncated, overrides $WRESLAB_CAP_J"
        f" (default: {Config.get_default('cap_j')})",
    )
    parser.add_argument("--nodes", type=positive_int, help="quadrature nodes of the contour lift")
    parser.add_argument("--grid", type=positive_int, help="odd number of grid points for float checks")

    # Suites
    parser.add_argument("--seed", type=int, help=f"seed of all random trials (default: {Config.get_default('seed')})")
    parser.add_argument("--trials", type=int, help=f"number of random trials (default: {Config.get_default('trials')})")
    parser.add_argument("-j", "--jobs", type=int, help="worker processes running the trials")

    # Logging
    parser.add_argument("-l", "--log", dest="log", default=None, type=lambda x: Path(x), help="path to log file")
    parser.add_argument(
        "--details-to-stdout",
        dest="details_to_stdout",
        help="print details (e.g. Newton steps) to stdout, instead of writing to the log",
        action="store_true",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        dest="verbose",
        action="store_true",
        help="write even more to the logfiles (per-trial results, Newton steps)",
    )
    parser.add_argument(
        "-q", "--quiet", dest="quiet", action="store_true", help="do not output any log messages"
    )

    # Actions
    sub = parser.add_subparsers(title="action", dest="action")

    compose = sub.add_parser("compose", help="symbol of the composition A∘B")
    add_file_arg(compose, "a", "left factor")
    add_file_arg(compose, "b", "right factor")

    adjoint = sub.add_parser("adjoint", help="symbol of the formal adjoint A*")
    add_file_arg(adjoint, "a", "symbol")

    residue = sub.add_parser("residue", help="Wodzicki residue and residue density of A")
    add_file_arg(residue, "a", "symbol")
    residue.add_argument(
        "--geometric", action="store_true", help="also print WRes = 2π·r (f64 mode only)"
    )

    lift = sub.add_parser("lift", help="lift an order-0 symbol with idempotent principal part to a projection")
    add_file_arg(lift, "p", "order-0 symbol")
    lift.add_argument(
        "--method",
        choices=["algebraic", "contour"],
        default="algebraic",
        help="Newton iteration (exact) or Riesz contour quadrature (f64)",
    )

    self_adjointize = sub.add_parser(
        "self-adjointize", help="self-adjoint projection with the same principal symbol"
    )
    add_file_arg(self_adjointize, "p", "projection symbol")

    dirac = sub.add_parser(
        "dirac-experiment",
        help="residues of lifted positive spectral projections of random"
        " first-order systems, as CSV",
    )
    dirac.add_argument(
        "-k", "--k", dest="size", type=positive_int, default=2, help="matrix size k of the systems (default: 2)"
    )

    verify_trace = sub.add_parser(
        "verify-trace", help="compare residue traces of two idempotents of a jet ring"
    )
    add_file_arg(verify_trace, "p", "idempotent jet P")
    add_file_arg(verify_trace, "ptilde", "idempotent jet P̃ with P̃ ≡ P at level 0")
    verify_trace.add_argument(
        "--j", dest="trace_index", type=int, help="only check τ_J (default: all levels)"
    )

    cocycle = sub.add_parser("cocycle", help="transition data and ℤ/k cocycle of a sampled nerve")
    add_file_arg(cocycle, "nerve", "nerve with sampled transition maps")
    cocycle.add_argument("--report", type=lambda x: Path(x), help="write the report to this file")

    arguments_suite(sub)

    # Action: config
    config = sub.add_parser("config", help="get and set wreslab options")
    config.add_argument(
        "-r",
        "--reset",
        action="store_true",
        help="Reset config options with the given name to it's default.",
    )
    config.add_argument(
        "name",
        nargs="?",
        help="variable name, one of: " + ", ".join(sorted(Config.keys())),
        choices=Config.keys(),
        metavar="name",
    )
    config.add_argument("value", nargs="?", help="set variable to value")

    # Action: log
    log = sub.add_parser("log", help="show the end of the wreslab logfile")
    log.add_argument("-n", "--lines", type=int, default=60, help="count of output lines")
    log.add_argument("-c", "--clear", help="clear the log", action="store_true", dest="clear_log")

    if "argcomplete" in sys.modules:
        argcomplete.autocomplete(parser, always_complete_options="long")

    return parser


def arguments() -> WreslabArgs:
    args = cast(WreslabArgs, get_parser().parse_args())
    wreslab.helpers.args.init(args)
    return args
