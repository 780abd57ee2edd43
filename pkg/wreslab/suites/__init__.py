# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
"""Seeded verification batteries.

Every suite module provides trial(params, index, rng) and fixtures(params).
Trial i draws from the i-th child stream of the seed, so reports do not
depend on the number of worker processes.
"""

from __future__ import annotations

import functools
from types import ModuleType
from typing import Any

import wreslab.config
from wreslab.core.config import Config
from wreslab.helpers import logging
from wreslab.helpers.exceptions import NonBugError
from wreslab.helpers.trials import run_trials
from wreslab.suites import cocycle, frames, independence, lift, oracle, prop1, trace, vanish
from wreslab.suites.base import FixtureResult, SuiteParams, SuiteReport, TrialResult

SUITES: dict[str, ModuleType] = {
    "trace": trace,
    "prop1": prop1,
    "vanish": vanish,
    "cocycle": cocycle,
    "frames": frames,
    "lift": lift,
    "independence": independence,
    "oracle": oracle,
}


def suite_params(config: Config, overrides: dict[str, Any] | None = None) -> SuiteParams:
    """Merge config values, suite defaults and per-run overrides (None = unset)."""
    sizes = dict(wreslab.config.suite_defaults)
    for key, value in (overrides or {}).items():
        if value is None:
            continue
        if key not in sizes:
            raise NonBugError(f"Unknown suite parameter: {key}")
        if value < 1:
            raise NonBugError(f"Suite parameter {key} must be positive, got {value}")
        sizes[key] = value
    return SuiteParams(
        mode=config.mode,
        depth=config.depth,
        k=sizes["k"],
        n_levels=sizes["n_levels"],
        max_j=sizes["max_j"],
        nodes=config.nodes,
        grid=config.grid,
    )


def run_suite(name: str, config: Config, overrides: dict[str, Any] | None = None) -> SuiteReport:
    """Run the fixtures and config.trials seeded trials of one suite.

    :raises NonBugError: for an unknown suite or invalid parameters
    """
    if name not in SUITES:
        raise NonBugError(f"Unknown suite '{name}', expected one of: {', '.join(SUITES)}")
    if config.trials < 0:
        raise NonBugError(f"--trials can not be negative, got {config.trials}")
    module = SUITES[name]
    params = suite_params(config, overrides)
    logging.info(f"*** Suite {name}: {config.trials} trials, seed {config.seed}, {params.mode} mode")

    report = SuiteReport(name, config.seed, config.trials, params)
    if config.trials == 0:
        logging.info("No trials requested")
        return report
    report.fixtures = module.fixtures(params)
    for fixture in report.fixtures:
        logging.verbose(f"{name}: fixture {fixture.name}: {'ok' if fixture.ok else 'FAILED'}")
    trial = functools.partial(module.trial, params)
    report.results = run_trials(trial, config.seed, config.trials, config.jobs)

    if report.ok:
        logging.info(f"{name}: {report.passed}/{config.trials} trials passed")
    else:
        first = report.first_failure()
        where = f", first counterexample: trial {first.index}" if first else ""
        logging.warning(f"WARNING: {name}: {report.failed}/{config.trials} trials failed{where}")
    return report


__all__ = ["SUITES", "FixtureResult", "SuiteParams", "SuiteReport", "TrialResult", "run_suite", "suite_params"]
