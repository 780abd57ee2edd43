# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
"""Residue traces of two idempotent lifts of the same projection agree.

Every trial conjugates a constant projection P₀ in Mat(k) by a random unit
to get P, then compares τ_j(P) with τ_j(P̃) for all j, once for P̃ the
Newton lift of P + tZ and once for P̃ = (1 + tZ)P(1 + tZ)⁻¹.
"""

from __future__ import annotations

import numpy as np

from wreslab.filtered.idempotent import perturbed_lift, unit_conjugate
from wreslab.filtered.jet import MatrixJet
from wreslab.filtered.theorem import expansion_coefficients, series_residual, verify_projection_trace_invariance
from wreslab.filtered.trace import ResidueTraceSpec
from wreslab.helpers import logging
from wreslab.helpers.exceptions import StructuralError
from wreslab.helpers.trials import random_matrix
from wreslab.parse.symbolfile import encode_jet, encode_matrix
from wreslab.suites.base import FixtureResult, SuiteParams, TrialResult

# Size of random units in f64 mode, keeping the Newton iteration well conditioned
FLOAT_SCALE = 0.3


def _projection(params: SuiteParams, rank: int) -> MatrixJet:
    field = params.field
    diagonal = [1 if i < rank else 0 for i in range(params.k)]
    return MatrixJet.constant(field, params.n_levels, field.matrix(np.diag(diagonal).tolist()))


def trial(params: SuiteParams, index: int, rng: np.random.Generator) -> TrialResult:
    if params.k < 2:
        raise StructuralError("prop1 needs k >= 2 for a non-trivial projection")
    field = params.field
    scale = 1.0 if field.exact else FLOAT_SCALE
    rank = int(rng.integers(1, params.k))
    z, z_newton, z_unit = (random_matrix(field, params.k, rng, scale) for _ in range(3))
    p = unit_conjugate(_projection(params, rank), z)

    ok = True
    checks = []
    for kind, ptilde in (("newton", perturbed_lift(p, z_newton)), ("unit", unit_conjugate(p, z_unit))):
        for j in range(params.n_levels):
            report = verify_projection_trace_invariance(p, ptilde, ResidueTraceSpec(j))
            ok = ok and report.ok
            checks.append({"kind": kind, **report.as_dict(field.encode)})
    logging.verbose(f"prop1 #{index}: rank {rank}, {'ok' if ok else 'FAILED'}")
    result = TrialResult(index, ok, {"rank": rank, "checks": checks})
    if not ok:
        result.counterexample = {
            "p": encode_jet(p),
            "z_newton": encode_matrix(field, z_newton),
            "z_unit": encode_matrix(field, z_unit),
        }
    return result


def fixtures(params: SuiteParams) -> list[FixtureResult]:
    """The series coefficients used by the expansion checks solve x² + x + y = 0."""
    ell = max(params.n_levels - 2, 1)
    coeffs = expansion_coefficients(ell)
    residual = series_residual(coeffs)
    return [FixtureResult("expansion_coefficients", not any(residual), {"coefficients": coeffs, "residual": residual})]
