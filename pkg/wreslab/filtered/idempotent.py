# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
from __future__ import annotations

import numpy as np

import wreslab.config
from wreslab.helpers import logging
from wreslab.helpers.exceptions import PreconditionError

from .jet import MatrixJet


def jet_newton_steps(N: int) -> int:
    """⌈log₂ N⌉ + 1"""
    return (N - 1).bit_length() + 1


def idempotent_defect(x: MatrixJet) -> MatrixJet:
    """X² − X"""
    return x * x - x


def _tol(x: MatrixJet) -> float | None:
    return None if x.field.exact else wreslab.config.scalar_tol


def is_idempotent(x: MatrixJet) -> bool:
    return idempotent_defect(x).level(tol=_tol(x)) == x.N


def newton_idempotent_lift(x0: MatrixJet) -> MatrixJet:
    """Idempotent P ≡ X0 mod L⁻¹, by X ← 3X² − 2X³.

    Each step at least doubles the level of the defect X² − X, so
    ⌈log₂ N⌉ + 1 steps reach L⁻ᴺ = 0.

    :raises PreconditionError: if X0 is not idempotent modulo L⁻¹
    """
    if idempotent_defect(x0).level(tol=_tol(x0)) < 1:
        raise PreconditionError("X0² − X0 has a nonzero constant term")
    x = x0
    steps = jet_newton_steps(x0.N)
    for step in range(steps):
        square = x * x
        if (square - x).level(tol=0.0) == x.N:
            logging.verbose(f"newton_idempotent_lift: idempotent after {step} steps")
            break
        x = square.scale(3) - (square * x).scale(2)
    return x


def unit_inverse(u: MatrixJet) -> MatrixJet:
    """Inverse of a unit 1 + T with T ∈ L⁻¹: Σ_{n<N} (−T)^n.

    :raises PreconditionError: if u is not ≡ 1 mod L⁻¹
    """
    one = MatrixJet.identity(u.field, u.k, u.N)
    t = u - one
    if t.level(tol=_tol(u)) < 1:
        raise PreconditionError("Not a unit of the form 1 + L⁻¹")
    out = one
    power = one
    for _ in range(1, u.N):
        power = power * (-t)
        out = out + power
    return out


def unit_conjugate(p: MatrixJet, z: np.ndarray) -> MatrixJet:
    """U P U⁻¹ for the unit U = 1 + tZ."""
    u = MatrixJet.identity(p.field, p.k, p.N) + MatrixJet.monomial(p.field, p.N, 1, z)
    return u * p * unit_inverse(u)


def perturbed_lift(p: MatrixJet, z: np.ndarray) -> MatrixJet:
    """Newton lift of the level-1 perturbation P + tZ."""
    return newton_idempotent_lift(p + MatrixJet.monomial(p.field, p.N, 1, z))
