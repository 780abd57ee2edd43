# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
"""The residue density does not depend on the local frame."""

from __future__ import annotations

import numpy as np

from wreslab.helpers import logging
from wreslab.parse.symbolfile import encode_symbol, encode_trigpoly
from wreslab.residue.wres import RESIDUE_DEGREE, wres_density
from wreslab.suites.base import FixtureResult, SuiteParams, TrialResult
from wreslab.suites.generators import random_symbol, random_unimodular, rotation
from wreslab.symbol.calculus import change_of_frame

# Pointwise agreement of the densities in f64 mode
FLOAT_TOL = 1e-9


def trial(params: SuiteParams, index: int, rng: np.random.Generator) -> TrialResult:
    field = params.field
    m = int(rng.integers(-1, 2))
    a = random_symbol(field, 2, m, RESIDUE_DEGREE, params.max_j, rng)
    n = int(rng.integers(0, 3))
    g = random_unimodular(field, rng)
    moved = change_of_frame(a, g, rotation(field, n), RESIDUE_DEGREE)
    before, after = wres_density(a), wres_density(moved)
    ok = after == before if field.exact else after.isclose(before, FLOAT_TOL)
    logging.verbose(f"frames #{index}: order {m}, rotation {n}, g={g!r}: {'ok' if ok else 'FAILED'}")
    result = TrialResult(index, ok, {"order": m, "rotation": n, "density_max_abs": before.max_abs()})
    if not ok:
        result.counterexample = {"a": encode_symbol(a), "g": encode_trigpoly(g), "rotation": n}
    return result


def fixtures(params: SuiteParams) -> list[FixtureResult]:
    return []
