# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
"""Transition data of synthetic convolution bundles and their ℤ/k cocycles.

Random trials build four charts with frames φ_αβ(x) = ε_αβ g_α(x) g_β(x)⁻¹,
g_α(x) = R(n_α x)h_α for random h_α ∈ SU(2) and signs ε_αβ = ±1.
"""

from __future__ import annotations

import itertools

import numpy as np

import wreslab.config
from wreslab.cocycle.dd import analyze_nerve, frame
from wreslab.cocycle.fixtures import four_chart_nerve, nerve_from_frames, quaternion_nerve, rotation
from wreslab.cocycle.nerve import Pair
from wreslab.helpers import logging
from wreslab.helpers.exceptions import WreslabError
from wreslab.suites.base import FixtureResult, SuiteParams, TrialResult
from wreslab.suites.generators import random_su2

CHARTS = [1, 2, 3, 4]
# frames turn by at most 1/4 rad between neighbouring points
TRIAL_POINTS = [i / 16 for i in range(9)]


def _frame_function(h: dict[int, np.ndarray], n: dict[int, int], sign: float, a: int, b: int):
    def phi(x: float) -> np.ndarray:
        ga = rotation(n[a] * x) @ h[a]
        gb = rotation(n[b] * x) @ h[b]
        return sign * ga @ np.linalg.inv(gb)

    return phi


def trial(params: SuiteParams, index: int, rng: np.random.Generator) -> TrialResult:
    h = {c: random_su2(rng) for c in CHARTS}
    n = {c: int(rng.integers(-2, 3)) for c in CHARTS}
    pairs: list[Pair] = list(itertools.combinations(CHARTS, 2))
    signs = {pair: float(rng.choice([-1.0, 1.0])) for pair in pairs}
    frames = {pair: _frame_function(h, n, signs[pair], *pair) for pair in pairs}
    nerve, sample = nerve_from_frames(frames, list(itertools.combinations(CHARTS, 3)), [tuple(CHARTS)], points=TRIAL_POINTS)

    try:
        report = analyze_nerve(nerve, sample)
    except WreslabError as e:
        logging.verbose(f"cocycle #{index}: {e}")
        return TrialResult(index, False, {"error": str(e)}, {"signs": [[*p, s] for p, s in signs.items()]})

    # Extracted frames differ from g_α g_β⁻¹ by ε_αβ times a canonicalization
    # sign; ζ is the product of these total signs around the triple.
    x0 = TRIAL_POINTS[0]
    total = {}
    for pair in pairs:
        ratio = frame(report.decomposition.phis, pair, x0) @ np.linalg.inv(frames[pair](x0))
        total[pair] = signs[pair] * float(np.sign(np.real(np.trace(ratio))))
    mismatch = 0.0
    for a, b, c in report.cocycle.zeta:
        expected = total[(a, b)] * total[(b, c)] * total[(a, c)]
        mismatch = max(mismatch, abs(report.cocycle.zeta[(a, b, c)] - expected))
    ok = report.ok() and mismatch <= wreslab.config.scalar_tol
    logging.verbose(f"cocycle #{index}: {'ok' if ok else 'FAILED'}")

    result = TrialResult(index, ok, {**report.as_dict(), "sign_mismatch": mismatch})
    if not ok:
        result.counterexample = {
            "signs": [[*p, s] for p, s in signs.items()],
            "windings": [n[c] for c in CHARTS],
            "frames": [[[[z.real, z.imag] for z in row] for row in h[c]] for c in CHARTS],
        }
    return result


def fixtures(params: SuiteParams) -> list[FixtureResult]:
    out = []
    for name, build, expected in (
        ("quaternion", quaternion_nerve, {(1, 2, 3): -1}),
        ("four_chart", four_chart_nerve, {t: -1 for t in itertools.combinations(CHARTS, 3)}),
    ):
        nerve, sample = build()
        report = analyze_nerve(nerve, sample)
        ok = report.ok() and all(
            abs(report.cocycle.zeta[t] - z) <= wreslab.config.scalar_tol for t, z in expected.items()
        )
        out.append(FixtureResult(name, ok, report.as_dict()))
    return out
