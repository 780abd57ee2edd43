# Copyright 2024 Caleb Connolly
# SPDX-License-Identifier: GPL-3.0-or-later

from __future__ import annotations

from wreslab.types import WreslabArgs

from .base import Command, emit
from .cocycle import Cocycle
from .config import ConfigCommand
from .dirac import DiracExperiment
from .lift import Lift, SelfAdjointize
from .log import Log
from .suite import Suite
from .symbols import Adjoint, Compose, Residue
from .verify_trace import VerifyTrace

"""Every wreslab subcommand is a Command, built from the parsed arguments."""


def run_command(args: WreslabArgs) -> None:
    command: Command
    match args.action:
        case "compose":
            command = Compose(args.a, args.b, args.out)
        case "adjoint":
            command = Adjoint(args.a, args.out)
        case "residue":
            command = Residue(args.a, args.geometric, args.out)
        case "lift":
            command = Lift(args.p, args.method, args.out)
        case "self-adjointize":
            command = SelfAdjointize(args.p, args.out)
        case "dirac-experiment":
            command = DiracExperiment(args.size, args.out)
        case "verify-trace":
            command = VerifyTrace(args.p, args.ptilde, args.trace_index, args.out)
        case "cocycle":
            command = Cocycle(args.nerve, args.report or args.out)
        case "suite":
            command = Suite(args.action_suite, args.size, args.n_levels, args.max_j, args.out)
        case "config":
            command = ConfigCommand(args.config, args.name, args.value, args.reset)
        case "log":
            command = Log(args.clear_log, args.lines)
        case _:
            raise NotImplementedError(f"Command '{args.action}' is not implemented.")

    command.run()
