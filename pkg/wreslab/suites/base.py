# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
"""Parameters, per-trial results and reports shared by all suites."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from wreslab.core.scalar import Field, Mode, field_for


@dataclass(frozen=True)
class SuiteParams:
    mode: Mode
    # lifts and compositions are determined down to degree -depth
    depth: int
    k: int
    n_levels: int
    max_j: int
    nodes: int
    grid: int

    @property
    def field(self) -> Field:
        return field_for(self.mode)

    @property
    def floor(self) -> int:
        return -self.depth

    def as_dict(self) -> dict[str, Any]:
        return {
            "mode": str(self.mode),
            "depth": self.depth,
            "k": self.k,
            "n_levels": self.n_levels,
            "max_j": self.max_j,
            "nodes": self.nodes,
            "grid": self.grid,
        }


@dataclass
class TrialResult:
    """Outcome of one seeded trial. values and counterexample are JSON-ready."""

    index: int
    ok: bool
    values: dict[str, Any] = field(default_factory=dict)
    # inputs that reproduce a failure, only filled in for failed trials
    counterexample: dict[str, Any] | None = None

    def as_dict(self) -> dict[str, Any]:
        return {"index": self.index, **self.values, "ok": self.ok}


@dataclass
class FixtureResult:
    """Outcome of a fixed, non-random check that a suite always runs."""

    name: str
    ok: bool
    values: dict[str, Any] = field(default_factory=dict)

    def as_dict(self) -> dict[str, Any]:
        return {"name": self.name, **self.values, "ok": self.ok}


@dataclass
class SuiteReport:
    name: str
    seed: int
    trials: int
    params: SuiteParams
    results: list[TrialResult] = field(default_factory=list)
    fixtures: list[FixtureResult] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(1 for r in self.results if r.ok)

    @property
    def failed(self) -> int:
        return len(self.results) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0 and all(f.ok for f in self.fixtures)

    def first_failure(self) -> TrialResult | None:
        return next((r for r in self.results if not r.ok), None)

    def as_dict(self) -> dict[str, Any]:
        first = self.first_failure()
        counterexample = None
        if first is not None:
            counterexample = {"index": first.index, "seed": self.seed, **(first.counterexample or {})}
        return {
            "suite": self.name,
            "seed": self.seed,
            "trials": self.trials,
            "params": self.params.as_dict(),
            "passed": self.passed,
            "failed": self.failed,
            "ok": self.ok,
            "fixtures": [f.as_dict() for f in self.fixtures],
            "results": [r.as_dict() for r in self.results],
            "first_counterexample": counterexample,
        }
