# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
"""Synthetic nerves with quaternionic frames.

The frames iσ₁, iσ₂, iσ₃ ∈ SU(2) commute only up to sign, so their triple
products are ±I and define a ℤ/2 cocycle that is no coboundary of the
chosen frames.
"""

from __future__ import annotations

import cmath
from collections.abc import Callable
import itertools
import math

import numpy as np

from .nerve import NerveData, Pair, TransitionSample
from .transition import transition_sample

SIGMA1 = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA2 = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA3 = np.array([[1, 0], [0, -1]], dtype=np.complex128)
IDENTITY = np.eye(2, dtype=np.complex128)

POINTS = [0.0, 0.25, 0.5]


def rotation(angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, -s], [s, c]], dtype=np.complex128)


def _constants(frames: dict[Pair, np.ndarray]) -> dict[Pair, Callable[[float], np.ndarray]]:
    return {pair: (lambda x, u=u: u) for pair, u in frames.items()}


def _phase(n: int):
    return lambda x, y: cmath.exp(1j * n * (x - y))


def nerve_from_frames(
    frames: dict[Pair, Callable[[float], np.ndarray]], triples, tetrahedra=(), k: int = 2, points: list[float] = POINTS
) -> tuple[NerveData, TransitionSample]:
    """Nerve on the charts of `frames`, sampled at `points`, with frames φ_αβ(x)."""
    point_pairs = list(itertools.product(points, points))
    charts = sorted({c for pair in frames for c in pair})
    nerve = NerveData(
        charts,
        {pair: point_pairs for pair in frames},
        {t: list(points) for t in triples},
        {t: list(points) for t in tetrahedra},
    )
    # λ_αβ(x, y) = e^{in(x−y)} with n differing between overlaps
    scalars = {pair: _phase(n) for n, pair in enumerate(frames)}
    sample = transition_sample(k, frames, scalars, nerve.overlaps)
    return nerve, sample


def quaternion_frames() -> dict[Pair, np.ndarray]:
    return {(1, 2): 1j * SIGMA1, (2, 3): 1j * SIGMA2, (1, 3): 1j * SIGMA3}


def quaternion_nerve() -> tuple[NerveData, TransitionSample]:
    """Three charts, ζ₁₂₃ = iσ₁·iσ₂·(iσ₃)⁻¹ = −1."""
    return nerve_from_frames(_constants(quaternion_frames()), [(1, 2, 3)])


def four_chart_frames() -> dict[Pair, np.ndarray]:
    return {
        **quaternion_frames(),
        (1, 4): IDENTITY,
        (2, 4): 1j * SIGMA1,
        (3, 4): 1j * SIGMA3,
    }


def four_chart_nerve() -> tuple[NerveData, TransitionSample]:
    """Four charts whose four faces all carry ζ = −1."""
    faces = list(itertools.combinations([1, 2, 3, 4], 3))
    return nerve_from_frames(_constants(four_chart_frames()), faces, [(1, 2, 3, 4)])


def rotation_sample(points: list[float] = POINTS) -> TransitionSample:
    """One overlap with Φ(x, y)(A) = R(x) A R(y)⁻¹ for planar rotations R."""
    pairs = list(itertools.product(points, points))
    return transition_sample(2, {(1, 2): rotation}, {(1, 2): lambda x, y: 1.0}, {(1, 2): pairs})
