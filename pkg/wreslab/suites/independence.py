# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
"""wres of a lift depends only on the principal symbol, and is stable under
adding zero blocks and conjugating by units."""

from __future__ import annotations

import numpy as np

from wreslab.helpers import logging
from wreslab.parse.symbolfile import encode_symbol
from wreslab.projection.lift import newton_lift, stabilized_residue_check
from wreslab.residue.wres import wres
from wreslab.suites.base import FixtureResult, SuiteParams, TrialResult
from wreslab.suites.generators import random_junk, random_padded_principal, random_unipotent

FLOAT_TOL = 1e-8


def trial(params: SuiteParams, index: int, rng: np.random.Generator) -> TrialResult:
    field, floor = params.field, params.floor
    p = random_padded_principal(field, params.k, rng)
    starts = [p.as_symbol() + random_junk(field, params.k, rng) for _ in range(2)]
    r1, r2 = (wres(newton_lift(x0, floor)) for x0 in starts)
    same = r1 == r2 if field.exact else abs(complex(r1 - r2)) <= FLOAT_TOL

    stable = stabilized_residue_check(p, random_unipotent(field, params.k + 1, rng), 1, floor)
    ok = same and stable.ok
    logging.verbose(f"independence #{index}: wres {r1} vs {r2}, stabilized {stable.ok}")
    result = TrialResult(
        index,
        ok,
        {
            "wres": [field.encode(r1), field.encode(r2)],
            "stabilized": [field.encode(r) for r in (stable.r, stable.r_stabilized, stable.r_conjugated)],
        },
    )
    if not ok:
        result.counterexample = {"starts": [encode_symbol(x0) for x0 in starts]}
    return result


def fixtures(params: SuiteParams) -> list[FixtureResult]:
    return []
