# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
"""Automorphisms of Mat(k) are inner: recover u ∈ SU(k) from A ↦ uAu⁻¹."""

from __future__ import annotations

import cmath
import math

import numpy as np

import wreslab.config
from wreslab.helpers.exceptions import NotAnAutomorphismError

from .nerve import apply_map, matrix_unit


def automorphism_defect(t: np.ndarray, k: int) -> float:
    """max |T(E_ab)T(E_cd) − δ_bc T(E_ad)| over all matrix units."""
    images = {(a, b): apply_map(t, matrix_unit(k, a, b)) for a in range(k) for b in range(k)}
    worst = 0.0
    for (a, b), left in images.items():
        for (c, d), right in images.items():
            expected = images[(a, d)] if b == c else 0
            worst = max(worst, float(np.max(np.abs(left @ right - expected))))
    return worst


def canonical_phase(u: np.ndarray) -> np.ndarray:
    """The multiple ω^m·u, ω = e^{2πi/k}, whose first nonzero entry (row-major)
    has argument in (−π/k, π/k]."""
    k = u.shape[0]
    threshold = wreslab.config.structural_tol * max(1.0, float(np.max(np.abs(u))))
    first = next(x for x in u.flat if abs(x) > threshold)
    half = math.pi / k
    # slack keeps entries sitting on the window edge on the closed side
    eps = 1e-9
    for m in range(k):
        root = cmath.exp(2j * math.pi * m / k)
        arg = cmath.phase(first * root)
        if -half + eps < arg <= half + eps:
            return u * root
    return u


def extract_inner(t: np.ndarray) -> np.ndarray:
    """u with det u = 1 and T(A) = uAu⁻¹, in canonical phase.

    Column c of T(E_i1) is u e_i·w_c with w = e_1ᵀu⁻¹, so the columns
    T(E_i1)e_c assemble w_c·u; c is picked to maximize |w_c|.

    :raises NotAnAutomorphismError: if T is not multiplicative or not invertible
    """
    n = t.shape[0]
    k = math.isqrt(n)
    if k * k != n or t.shape != (n, n):
        raise NotAnAutomorphismError(f"A {t.shape} matrix is no map on a matrix algebra")
    t = np.asarray(t, dtype=np.complex128)
    defect = automorphism_defect(t, k)
    if defect > wreslab.config.structural_tol:
        raise NotAnAutomorphismError(f"Map is not multiplicative on matrix units (defect {defect:.3g})")

    e11 = apply_map(t, matrix_unit(k, 0, 0))
    c = int(np.argmax(np.linalg.norm(e11, axis=0)))
    m = np.column_stack([apply_map(t, matrix_unit(k, i, 0))[:, c] for i in range(k)])
    det = np.linalg.det(m)
    if abs(det) <= wreslab.config.structural_tol:
        raise NotAnAutomorphismError("Map is not invertible")
    u = m / det ** (1 / k)
    return canonical_phase(u)


def align_phase(u: np.ndarray, reference: np.ndarray) -> np.ndarray:
    """The multiple ω^m·u closest to reference, for continuing a frame from a
    neighbouring sample point."""
    k = u.shape[0]
    candidates = [u * cmath.exp(2j * math.pi * m / k) for m in range(k)]
    return min(candidates, key=lambda v: float(np.linalg.norm(v - reference)))
