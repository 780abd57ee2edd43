# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
"""Lifted projections are idempotent, and both lifting algorithms agree."""

from __future__ import annotations

import numpy as np

from wreslab.core.scalar import F64
from wreslab.helpers import logging
from wreslab.parse.symbolfile import encode_symbol, encode_trigpoly
from wreslab.projection.lift import contour_lift, defect, newton_lift, self_adjointize
from wreslab.suites.base import FixtureResult, SuiteParams, TrialResult
from wreslab.suites.generators import random_junk, random_padded_principal
from wreslab.symbol.calculus import adjoint
from wreslab.symbol.classical import ClassicalSymbol

# contour and algebraic lifts must agree componentwise to this
CONTOUR_TOL = 1e-6
FLOAT_TOL = 1e-8


def max_abs(a: ClassicalSymbol) -> float:
    return max((max(c.plus.max_abs(), c.minus.max_abs()) for c in a.components.values()), default=0.0)


def _vanishes(a: ClassicalSymbol) -> bool:
    if a.field.exact:
        return not a.components
    return max_abs(a) <= FLOAT_TOL


def trial(params: SuiteParams, index: int, rng: np.random.Generator) -> TrialResult:
    field, floor = params.field, params.floor
    p = random_padded_principal(field, params.k, rng)
    x0 = p.as_symbol() + random_junk(field, params.k, rng)
    lifted = newton_lift(x0, floor)
    keeps_principal = lifted.principal() == p.component() if field.exact else lifted.principal().isclose(
        p.component(), FLOAT_TOL
    )
    idempotent = _vanishes(defect(lifted, floor)) and keeps_principal

    xf = x0.cast(F64)
    algebraic = lifted if not field.exact else newton_lift(xf, floor)
    contour = contour_lift(xf, floor, params.nodes, params.grid)
    contour_distance = max_abs(contour - algebraic)

    # self-adjoint principal, lifted from a perturbed start
    q0 = random_padded_principal(field, params.k, rng, self_adjoint=True)
    start = newton_lift(q0.as_symbol() + random_junk(field, params.k, rng), floor)
    q = self_adjointize(start, floor)
    self_adjoint = _vanishes(adjoint(q, floor) - q)
    q_idempotent = _vanishes(defect(q, floor))
    same_principal = q.principal() == start.principal() if field.exact else q.principal().isclose(
        start.principal(), FLOAT_TOL
    )

    checks = {
        "start_defect": max_abs(defect(x0, floor)),
        "idempotent": idempotent,
        "contour_distance": contour_distance,
        "self_adjoint": self_adjoint,
        "self_adjoint_idempotent": q_idempotent,
        "same_principal": same_principal,
    }
    ok = idempotent and contour_distance <= CONTOUR_TOL and self_adjoint and q_idempotent and same_principal
    logging.verbose(f"lift #{index}: {checks}")
    result = TrialResult(index, ok, checks)
    if not ok:
        result.counterexample = {
            "p_plus": encode_trigpoly(p.p_plus),
            "p_minus": encode_trigpoly(p.p_minus),
            "start": encode_symbol(x0),
            "self_adjoint_start": encode_symbol(start),
        }
    return result


def fixtures(params: SuiteParams) -> list[FixtureResult]:
    return []
