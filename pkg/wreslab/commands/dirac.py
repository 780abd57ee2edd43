# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
from __future__ import annotations

import csv
import functools
from pathlib import Path
import sys
from typing import Any, TextIO

import numpy as np

from wreslab import commands
from wreslab.core.context import get_context
from wreslab.helpers import logging
from wreslab.helpers.trials import run_trials
from wreslab.projection.lift import algebraic_lift
from wreslab.projection.spectral import positive_spectral_projection_symbol
from wreslab.residue.wres import residue_report
from wreslab.suites.generators import random_first_order_system

# wres_r is the real part of the residue, wres_r_imag its imaginary part
COLUMNS = ["trial", "wres_r", "density_max_abs", "wres_r_imag", "projection_j"]


def dirac_row(k: int, depth: int, grid: int, index: int, rng: np.random.Generator) -> list[Any]:
    a, b = random_first_order_system(rng, k)
    p = positive_spectral_projection_symbol(a, b, grid)
    report = residue_report(algebraic_lift(p, -depth))
    r = complex(report.r)
    return [index, r.real, report.density_max_abs, r.imag, max(p.p_plus.J, p.p_minus.J)]


class DiracExperiment(commands.Command):
    """Residues of lifted positive spectral projections of ξA(x) + B(x) for
    random k×k systems A = diag(1, −1, ...) + H(x), one CSV row per trial."""

    def __init__(self, k: int, out: Path | None) -> None:
        self.k = k
        self.out = out

    def write(self, handle: TextIO, rows: list[list[Any]]) -> None:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(COLUMNS)
        writer.writerows(rows)

    def run(self) -> None:
        config = get_context().config
        row = functools.partial(dirac_row, self.k, config.depth, config.grid)
        rows = run_trials(row, config.seed, config.trials, config.jobs)
        worst = max((abs(complex(r[1], r[3])) for r in rows), default=0.0)
        logging.info(f"{len(rows)} spectral projections, largest |wres| = {worst:.3g}")
        if self.out is None:
            self.write(sys.stdout, rows)
            return
        self.out.parent.mkdir(parents=True, exist_ok=True)
        with open(self.out, "w", encoding="utf-8", newline="") as handle:
            self.write(handle, rows)
        logging.debug(f"Wrote {self.out}")
