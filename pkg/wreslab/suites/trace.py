# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
"""wres([a, b]) = 0 for random pairs of matrix symbols."""

from __future__ import annotations

import numpy as np

from wreslab.helpers import logging
from wreslab.parse.symbolfile import encode_symbol
from wreslab.residue.wres import RESIDUE_DEGREE, wres
from wreslab.suites.base import FixtureResult, SuiteParams, TrialResult
from wreslab.suites.generators import random_symbol
from wreslab.symbol.calculus import commutator

# Largest |wres([a, b])| accepted in f64 mode
FLOAT_TOL = 1e-9

MIN_ORDER = -2
MAX_ORDER = 2


def trial(params: SuiteParams, index: int, rng: np.random.Generator) -> TrialResult:
    field = params.field
    k = int(rng.integers(1, params.k + 1))
    ma, mb = (int(m) for m in rng.integers(MIN_ORDER, MAX_ORDER + 1, size=2))
    floor = min(params.floor, RESIDUE_DEGREE)
    # deep enough for both products down to floor
    a = random_symbol(field, k, ma, min(ma, floor - mb), params.max_j, rng)
    b = random_symbol(field, k, mb, min(mb, floor - ma), params.max_j, rng)
    c = commutator(a, b, floor)
    r = wres(c)
    ok = r == 0 if field.exact else abs(complex(r)) <= FLOAT_TOL
    logging.verbose(f"trace #{index}: k={k} orders=({ma}, {mb}) wres={r}")
    result = TrialResult(index, ok, {"k": k, "orders": [ma, mb], "floor": c.floor, "wres": field.encode(r)})
    if not ok:
        result.counterexample = {"a": encode_symbol(a), "b": encode_symbol(b)}
    return result


def fixtures(params: SuiteParams) -> list[FixtureResult]:
    return []
