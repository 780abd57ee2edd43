# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
from __future__ import annotations

from pathlib import Path

from wreslab import commands
from wreslab.core.context import get_context
from wreslab.helpers.exceptions import VerificationFailedError
from wreslab.parse.symbolfile import write_json
from wreslab.suites import run_suite


class Suite(commands.Command):
    def __init__(
        self, name: str, size: int | None, n_levels: int | None, max_j: int | None, out: Path | None
    ) -> None:
        self.name = name
        self.overrides = {"k": size, "n_levels": n_levels, "max_j": max_j}
        self.out = out

    def report_path(self) -> Path:
        if self.out is not None:
            return self.out
        config = get_context().config
        return config.work / "suites" / f"{self.name}-{config.mode}-seed{config.seed}.json"

    def run(self) -> None:
        report = run_suite(self.name, get_context().config, self.overrides)
        path = self.report_path()
        write_json(path, report.as_dict())
        print(path)
        if not report.ok:
            first = report.first_failure()
            where = f"trial {first.index}" if first else "a fixture"
            raise VerificationFailedError(
                f"Suite {self.name}: {report.failed} of {report.trials} trials failed,"
                f" first counterexample in {where}, see {path}"
            )
