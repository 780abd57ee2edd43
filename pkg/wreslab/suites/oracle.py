# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
"""Composition of differential symbols against the operators acting on e^{ijx}."""

from __future__ import annotations

import numpy as np

from wreslab.core.trigpoly import TrigPoly
from wreslab.helpers import logging
from wreslab.parse.symbolfile import encode_symbol
from wreslab.suites.base import FixtureResult, SuiteParams, TrialResult
from wreslab.suites.generators import random_differential_symbol
from wreslab.symbol.calculus import apply_to_function, compose

MAX_ORDER = 2
# Fourier modes e^{ijx}, |j| ≤ MODES, the operators are tested on
MODES = 8
# Relative to the size of the result in f64 mode
FLOAT_TOL = 1e-10


def trial(params: SuiteParams, index: int, rng: np.random.Generator) -> TrialResult:
    field, k = params.field, params.k
    oa, ob = (int(o) for o in rng.integers(0, MAX_ORDER + 1, size=2))
    a = random_differential_symbol(field, k, oa, params.max_j, rng)
    b = random_differential_symbol(field, k, ob, params.max_j, rng)
    ab = compose(a, b)
    failed = []
    for j in range(-MODES, MODES + 1):
        u = TrigPoly.monomial(field, j, field.eye(k))
        lhs = apply_to_function(ab, u)
        rhs = apply_to_function(a, apply_to_function(b, u))
        if not (lhs == rhs if field.exact else lhs.isclose(rhs, FLOAT_TOL * max(1.0, rhs.max_abs()))):
            failed.append(j)
    ok = not failed
    logging.verbose(f"oracle #{index}: orders ({oa}, {ob}), failing modes {failed}")
    result = TrialResult(index, ok, {"orders": [oa, ob], "failing_modes": failed})
    if not ok:
        result.counterexample = {"a": encode_symbol(a), "b": encode_symbol(b)}
    return result


def fixtures(params: SuiteParams) -> list[FixtureResult]:
    return []
