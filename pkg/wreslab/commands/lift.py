# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
from __future__ import annotations

from pathlib import Path

from wreslab import commands
from wreslab.core.context import get_context
from wreslab.helpers import logging
from wreslab.parse.symbolfile import encode_symbol, load_symbol
from wreslab.projection.lift import contour_lift, newton_lift, self_adjointize
from wreslab.types import LiftMethod


class Lift(commands.Command):
    def __init__(self, p: Path, method: LiftMethod, out: Path | None) -> None:
        self.p = p
        self.method = method
        self.out = out

    def run(self) -> None:
        config = get_context().config
        p = load_symbol(self.p, config.mode)
        match self.method:
            case "algebraic":
                lifted = newton_lift(p, -config.depth)
            case "contour":
                lifted = contour_lift(p, -config.depth, config.nodes, config.grid)
        logging.info(f"Lifted {p!r} down to degree {-config.depth} ({self.method})")
        commands.emit(encode_symbol(lifted), self.out)


class SelfAdjointize(commands.Command):
    def __init__(self, p: Path, out: Path | None) -> None:
        self.p = p
        self.out = out

    def run(self) -> None:
        config = get_context().config
        p = load_symbol(self.p, config.mode)
        commands.emit(encode_symbol(self_adjointize(p, -config.depth)), self.out)
