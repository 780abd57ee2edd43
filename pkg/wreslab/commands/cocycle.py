# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
from __future__ import annotations

from pathlib import Path

from wreslab import commands
from wreslab.cocycle.dd import analyze_nerve, root_index
from wreslab.helpers import logging
from wreslab.helpers.exceptions import VerificationFailedError
from wreslab.parse.symbolfile import load_nerve


class Cocycle(commands.Command):
    def __init__(self, nerve: Path, report: Path | None) -> None:
        self.nerve = nerve
        self.report = report

    def run(self) -> None:
        nerve, sample = load_nerve(self.nerve)
        report = analyze_nerve(nerve, sample)
        for triple, zeta in report.cocycle.zeta.items():
            logging.info(f"ζ{triple} = exp(2πi·{root_index(zeta, sample.k)}/{sample.k})")
        commands.emit(report.as_dict(), self.report)
        if not report.ok():
            raise VerificationFailedError(
                "Transition data violates the structure theorem"
                f" (round trip {report.decomposition.reconstruction_error:.3g},"
                f" ζ^k − 1 up to {report.cocycle.root_violation:.3g},"
                f" δζ − 1 up to {report.cocycle.closedness_violation:.3g})"
            )
