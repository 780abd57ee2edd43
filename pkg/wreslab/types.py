# Copyright 2024 Caleb Connolly
# SPDX-License-Identifier: GPL-3.0-or-later

from argparse import Namespace
from pathlib import Path
from typing import Literal

LiftMethod = Literal["algebraic", "contour"]


# Property list of the parsed command line; see wreslab/parse/arguments.py.
# Config keys (mode, depth, seed, ...) are removed by wreslab.helpers.args.init
# after being merged into the context.
class WreslabArgs(Namespace):
    a: Path
    action: str
    action_suite: str
    b: Path
    clear_log: bool
    config: Path
    details_to_stdout: bool
    geometric: bool
    lines: int
    log: Path | None
    max_j: int | None
    method: LiftMethod
    n_levels: int | None
    name: str | None
    nerve: Path
    out: Path | None
    p: Path
    ptilde: Path
    quiet: bool
    report: Path | None
    reset: bool
    size: int | None
    trace_index: int | None
    value: str | None
    verbose: bool
