# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
"""wres of lifted projections vanishes on the circle.

Trials lift a principal projection plus a random order −1 perturbation.
Exact trials draw the projection at random, f64 trials take the positive
spectral projection of a random first-order self-adjoint system.
"""

from __future__ import annotations

import numpy as np

from wreslab.core.scalar import F64
from wreslab.helpers import logging
from wreslab.parse.symbolfile import encode_symbol, encode_trigpoly
from wreslab.projection.lift import algebraic_lift, newton_lift
from wreslab.projection.principal import PrincipalProjection
from wreslab.projection.spectral import positive_spectral_projection_symbol
from wreslab.residue.wres import residue_report, wres
from wreslab.suites.base import FixtureResult, SuiteParams, TrialResult
from wreslab.suites.generators import random_first_order_system, random_junk, random_padded_principal
from wreslab.symbol.classical import ClassicalSymbol

# Largest |wres| accepted for lifts of spectral projections
FLOAT_TOL = 1e-8


def _is_zero(r, exact: bool) -> bool:
    return r == 0 if exact else abs(complex(r)) <= FLOAT_TOL


def _lower_degrees(a: ClassicalSymbol) -> list[int]:
    return sorted(d for d in a.components if d < 0)


def _exact_trial(params: SuiteParams, index: int, rng: np.random.Generator) -> TrialResult:
    p = random_padded_principal(params.field, params.k, rng)
    x0 = p.as_symbol() + random_junk(params.field, params.k, rng)
    lift = newton_lift(x0, params.floor)
    r = wres(lift)
    ok = _is_zero(r, True)
    result = TrialResult(
        index, ok, {"kind": "principal", "wres": params.field.encode(r), "lower_degrees": _lower_degrees(lift)}
    )
    if not ok:
        result.counterexample = {"x0": encode_symbol(x0)}
    return result


def _float_trial(params: SuiteParams, index: int, rng: np.random.Generator) -> TrialResult:
    a, b = random_first_order_system(rng)
    p = positive_spectral_projection_symbol(a, b, params.grid)
    x0 = p.as_symbol() + random_junk(F64, p.k, rng)
    lift = newton_lift(x0, params.floor)
    r = wres(lift)
    ok = _is_zero(r, False)
    result = TrialResult(index, ok, {"kind": "spectral", "wres": F64.encode(r), "lower_degrees": _lower_degrees(lift)})
    if not ok:
        result.counterexample = {"a": encode_trigpoly(a), "b": encode_trigpoly(b), "x0": encode_symbol(x0)}
    return result


def trial(params: SuiteParams, index: int, rng: np.random.Generator) -> TrialResult:
    if params.field.exact:
        result = _exact_trial(params, index, rng)
    else:
        result = _float_trial(params, index, rng)
    logging.verbose(f"vanish #{index}: wres={result.values['wres']}")
    return result


def fixtures(params: SuiteParams) -> list[FixtureResult]:
    """Szegő and winding-family lifts; the reports carry the residue density."""
    field = params.field
    out = []
    for name, p in (
        ("szego", PrincipalProjection.szego(field)),
        ("winding", PrincipalProjection.winding(field)),
    ):
        report = residue_report(algebraic_lift(p, params.floor))
        out.append(
            FixtureResult(
                name,
                _is_zero(report.r, field.exact),
                {**report.as_dict(), "pointwise_vanishing": report.pointwise_vanishing()},
            )
        )
    return out
