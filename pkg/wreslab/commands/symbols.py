# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
from __future__ import annotations

from pathlib import Path

from wreslab import commands
from wreslab.core.context import get_context
from wreslab.helpers import logging
from wreslab.parse.symbolfile import encode_symbol, load_symbol
from wreslab.residue.wres import residue_report
from wreslab.symbol.calculus import adjoint, compose


class Compose(commands.Command):
    def __init__(self, a: Path, b: Path, out: Path | None) -> None:
        self.a = a
        self.b = b
        self.out = out

    def run(self) -> None:
        config = get_context().config
        a, b = load_symbol(self.a, config.mode), load_symbol(self.b, config.mode)
        result = compose(a, b, -config.depth)
        logging.info(f"Composed {a!r} and {b!r}: order {result.m}, floor {result.floor}")
        commands.emit(encode_symbol(result), self.out)


class Adjoint(commands.Command):
    def __init__(self, a: Path, out: Path | None) -> None:
        self.a = a
        self.out = out

    def run(self) -> None:
        config = get_context().config
        a = load_symbol(self.a, config.mode)
        commands.emit(encode_symbol(adjoint(a, -config.depth)), self.out)


class Residue(commands.Command):
    def __init__(self, a: Path, geometric: bool, out: Path | None) -> None:
        self.a = a
        self.geometric = geometric
        self.out = out

    def run(self) -> None:
        a = load_symbol(self.a, get_context().config.mode)
        report = residue_report(a)
        logging.info(f"wres = {report.r}")
        if not report.density.is_zero():
            logging.info(
                "NOTE: the residue density does not vanish pointwise"
                f" (max {report.density_max_abs:.3g})"
            )
        commands.emit(report.as_dict(self.geometric), self.out)
