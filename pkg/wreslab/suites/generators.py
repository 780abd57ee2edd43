# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
"""Random symbols, projections and frames for the verification suites.

Every generator draws from the numpy Generator it is given and nothing else.
Exact-mode objects have Gaussian-integer Fourier coefficients.
"""

from __future__ import annotations

import numpy as np

from wreslab.core.scalar import F64, Field
from wreslab.core.trigpoly import TrigPoly
from wreslab.helpers.exceptions import StructuralError
from wreslab.helpers.trials import random_matrix
from wreslab.projection.principal import PrincipalProjection
from wreslab.symbol.classical import ClassicalSymbol
from wreslab.symbol.homogeneous import HomComponent


def random_trigpoly(field: Field, k: int, J: int, rng: np.random.Generator, scale: float = 1.0) -> TrigPoly:
    """Σ_{|j|≤J} c_j e^{ijx} with random c_j; J itself is drawn from [0, J]."""
    top = int(rng.integers(0, J + 1))
    return TrigPoly(field, k, {j: random_matrix(field, k, rng, scale) for j in range(-top, top + 1)})


def random_component(field: Field, k: int, d: int, J: int, rng: np.random.Generator, scale: float = 1.0) -> HomComponent:
    return HomComponent(d, random_trigpoly(field, k, J, rng, scale), random_trigpoly(field, k, J, rng, scale))


def random_symbol(field: Field, k: int, m: int, floor: int, J: int, rng: np.random.Generator) -> ClassicalSymbol:
    """Order m, every degree from m down to floor filled."""
    return ClassicalSymbol(field, k, m, floor, [random_component(field, k, d, J, rng) for d in range(m, floor - 1, -1)])


def random_differential_symbol(field: Field, k: int, order: int, J: int, rng: np.random.Generator) -> ClassicalSymbol:
    """Complete symbol Σ_{d≤order} c_d(x) ξ^d."""
    components = [HomComponent.xi_power(field, k, d, random_trigpoly(field, k, J, rng)) for d in range(order + 1)]
    return ClassicalSymbol(field, k, order, None, components)


def rotation(field: Field, n: int) -> TrigPoly:
    """[[cos nx, −sin nx], [sin nx, cos nx]], an exact SU(2)-valued function."""
    one = field.eye(1)
    c, s = TrigPoly.cos(field, n, one), TrigPoly.sin(field, n, one)
    return TrigPoly.from_entries(field, [[c, -s], [s, c]])


def random_unimodular(field: Field, rng: np.random.Generator, J: int = 2) -> TrigPoly:
    """g = e^{ijx}, |g| = 1."""
    return TrigPoly.monomial(field, int(rng.integers(-J, J + 1)), field.eye(1))


def _rank_one(field: Field) -> np.ndarray:
    return field.matrix([[1, 0], [0, 0]])


def random_self_adjoint_half(field: Field, rng: np.random.Generator) -> TrigPoly:
    """R(nx)·diag(1, 0)·R(nx)ᵀ for a random frequency n."""
    r = rotation(field, int(rng.integers(0, 3)))
    return r.matrix_product(_rank_one(field), left=False) * r.transpose()


def random_half(field: Field, rng: np.random.Generator, J: int = 1) -> TrigPoly:
    """U·R p₀ Rᵀ·U⁻¹ with the unipotent U = I + f(x)E₁₂, idempotent but in
    general not self-adjoint."""
    p = random_self_adjoint_half(field, rng)
    f = random_trigpoly(field, 1, J, rng)
    e12 = field.matrix([[0, 1], [0, 0]])
    n = TrigPoly(field, 2, {j: c[0, 0] * e12 for j, c in f.coeffs.items()})
    one = TrigPoly.identity(field, 2)
    return (one + n) * p * (one - n)


def random_principal(field: Field, rng: np.random.Generator, self_adjoint: bool = False) -> PrincipalProjection:
    if self_adjoint:
        return PrincipalProjection(random_self_adjoint_half(field, rng), random_self_adjoint_half(field, rng))
    return PrincipalProjection(random_half(field, rng), random_half(field, rng))


def random_padded_principal(
    field: Field, k: int, rng: np.random.Generator, self_adjoint: bool = False
) -> PrincipalProjection:
    """Random 2×2 principal projection, block-summed with 0 up to k."""
    if k < 2:
        raise StructuralError(f"Random principal projections need k >= 2, got {k}")
    p = random_principal(field, rng, self_adjoint)
    if k > 2:
        p = p.block_sum(PrincipalProjection.zero(field, k - 2))
    return p


def random_unipotent(field: Field, k: int, rng: np.random.Generator, J: int = 1) -> TrigPoly:
    """I + f(x)E_{1k}, whose inverse I − f(x)E_{1k} is again a TrigPoly."""
    f = random_trigpoly(field, 1, J, rng)
    corner = field.zeros(k)
    corner[0, k - 1] = field.one
    return TrigPoly.identity(field, k) + TrigPoly(field, k, {j: c[0, 0] * corner for j, c in f.coeffs.items()})


def random_junk(field: Field, k: int, rng: np.random.Generator, J: int = 1) -> ClassicalSymbol:
    """Order −1 perturbation to add to an order-0 symbol before lifting."""
    return ClassicalSymbol(field, k, -1, None, [random_component(field, k, -1, J, rng)])


def random_su2(rng: np.random.Generator) -> np.ndarray:
    q = rng.normal(size=4)
    q /= np.linalg.norm(q)
    a, b = complex(q[0], q[1]), complex(q[2], q[3])
    return np.array([[a, -b.conjugate()], [b, a.conjugate()]], dtype=np.complex128)


def _hermitian_poly(rng: np.random.Generator, k: int, J: int, scale: float) -> TrigPoly:
    """Σ h_j e^{ijx} with h_{-j} = h_jᴴ, Hermitian at every x."""
    coeffs = {}
    for j in range(J + 1):
        h = scale * (rng.normal(size=(k, k)) + 1j * rng.normal(size=(k, k)))
        if j == 0:
            coeffs[0] = (h + h.conj().T) / 2
        else:
            coeffs[j], coeffs[-j] = h, h.conj().T
    return TrigPoly(F64, k, coeffs)


def random_first_order_system(
    rng: np.random.Generator, k: int = 2, scale: float = 0.05
) -> tuple[TrigPoly, TrigPoly]:
    """(A, B) with A = diag(1, −1, 1, −1, ...) + H(x), |H| of size scale, and
    B(x) Hermitian; f64. For k = 2, A = σ₃ + H."""
    signs = TrigPoly.constant(F64, np.diag([(-1.0) ** i for i in range(k)]).astype(np.complex128))
    return signs + _hermitian_poly(rng, k, 1, scale), _hermitian_poly(rng, k, 1, 1.0)
