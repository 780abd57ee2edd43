# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
"""Positive spectral projections of first-order self-adjoint systems ξA(x) + B(x)."""

from __future__ import annotations

import numpy as np

import wreslab.config
from wreslab.core.scalar import F64
from wreslab.core.trigpoly import TrigPoly
from wreslab.helpers import logging
from wreslab.helpers.exceptions import EllipticityError, PreconditionError, StructuralError
from wreslab.projection.principal import PrincipalProjection, is_self_adjoint
from wreslab.symbol.classical import ClassicalSymbol
from wreslab.symbol.homogeneous import HomComponent


def first_order_system(a: TrigPoly, b: TrigPoly) -> ClassicalSymbol:
    """Complete symbol ξA(x) + B(x)."""
    return ClassicalSymbol(
        a.field,
        a.k,
        1,
        None,
        [HomComponent.xi_power(a.field, a.k, 1, a), HomComponent.xi_power(a.field, a.k, 0, b)],
    )


def _positive_projection(values: np.ndarray) -> np.ndarray:
    """Projections onto the positive eigenspaces of Hermitian matrices (n, k, k)."""
    eigenvalues, vectors = np.linalg.eigh(values)
    if np.min(np.abs(eigenvalues)) <= wreslab.config.spectral_gap:
        raise EllipticityError("A(x) has an eigenvalue at 0, the system is not elliptic")
    mask = (eigenvalues > 0).astype(np.float64)
    return np.einsum("nij,nj,nkj->nik", vectors, mask, np.conjugate(vectors))


def positive_spectral_projection_symbol(
    a: TrigPoly, b: TrigPoly, grid: int = 33
) -> PrincipalProjection:
    """Principal symbol of the positive spectral projection of ξA(x) + B(x).

    p(x, ±1) projects onto the positive eigenvectors of ±A(x). The projections
    are computed by eigendecomposition on a grid of odd size and Fourier-fitted,
    so they are exact at the grid points. B is of order 0 and does not enter.

    :raises PreconditionError: if A or B is not pointwise self-adjoint
    :raises EllipticityError: if A(x) has an eigenvalue within the spectral gap of 0
    """
    if grid % 2 == 0:
        raise StructuralError(f"Spectral projections need an odd grid, got {grid}")
    a, b = a.cast(F64), b.cast(F64)
    for name, f in (("A", a), ("B", b)):
        if not is_self_adjoint(f):
            raise PreconditionError(f"{name}(x) is not self-adjoint")
    values = a.on_grid(grid)
    logging.debug(f"Spectral projection of a k={a.k} system on {grid} grid points")
    p_plus = TrigPoly.fit(F64, _positive_projection(values))
    p_minus = TrigPoly.fit(F64, _positive_projection(-values))
    return PrincipalProjection(p_plus, p_minus)
