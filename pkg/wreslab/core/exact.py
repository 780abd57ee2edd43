# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
"""Exact linear algebra over ℚ(i) and its Laurent polynomials, on sympy
domain matrices.

A k×k trigonometric polynomial Σ_j c_j e^{ijx} with |j| ≤ J becomes the
polynomial matrix z^J·Σ_j c_j z^j over ℚ(i)[z]; determinants and adjugates
are shifted back by kJ and (k−1)J.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

import numpy as np
from sympy import Symbol
from sympy.polys.domains import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from wreslab.core.scalar import GaussianRational
from wreslab.helpers.exceptions import StructuralError

# ℚ(i)[z], z = e^{ix}
LAURENT = QQ_I[Symbol("z")]


def _rational(q: Any) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


def to_domain(x: GaussianRational) -> Any:
    return QQ_I(QQ(x.re.numerator, x.re.denominator), QQ(x.im.numerator, x.im.denominator))


def from_domain(e: Any) -> GaussianRational:
    return GaussianRational(_rational(e.x), _rational(e.y))


def domain_matrix(m: np.ndarray) -> DomainMatrix:
    rows, cols = m.shape
    return DomainMatrix([[to_domain(x) for x in row] for row in m], (rows, cols), QQ_I)


def object_matrix(dm: DomainMatrix) -> np.ndarray:
    rows, cols = dm.shape
    out = np.empty((rows, cols), dtype=object)
    for r, row in enumerate(dm.to_list()):
        for c, e in enumerate(row):
            out[r, c] = from_domain(e)
    return out


def det(m: np.ndarray) -> GaussianRational:
    return from_domain(domain_matrix(m).det())


def inv(m: np.ndarray) -> np.ndarray:
    """:raises StructuralError: if m is singular"""
    try:
        return object_matrix(domain_matrix(m).inv())
    except DMNonInvertibleMatrixError:
        raise StructuralError("Matrix is singular")


def laurent_matrix(coeffs: dict[int, np.ndarray], k: int, shift: int) -> DomainMatrix:
    """Σ_j coeffs[j]·z^{j+shift} as a k×k matrix over ℚ(i)[z]."""
    rows = [
        [
            LAURENT.ring.from_dict({(j + shift,): to_domain(c[r, col]) for j, c in coeffs.items() if c[r, col] != 0})
            for col in range(k)
        ]
        for r in range(k)
    ]
    return DomainMatrix(rows, (k, k), LAURENT)


def laurent_coeffs(p: Any, shift: int) -> dict[int, GaussianRational]:
    """{j: c} with p = Σ c·z^{j+shift}."""
    return {monom[0] - shift: from_domain(c) for monom, c in p.terms()}


def adjugate(a: DomainMatrix) -> DomainMatrix:
    """adj(A) = (−1)^{k−1}(A^{k−1} + c₁A^{k−2} + … + c_{k−1}) for the
    characteristic polynomial λ^k + c₁λ^{k−1} + … + c_k of A."""
    k = a.shape[0]
    charpoly = a.charpoly()
    out = DomainMatrix.zeros((k, k), a.domain)
    power = DomainMatrix.eye(k, a.domain)
    for c in reversed(charpoly[:k]):
        out = out + power.scalarmul(c)
        power = power * a
    return out if k % 2 else -out


def matrix_coeffs(dm: DomainMatrix, shift: int) -> dict[int, np.ndarray]:
    """{j: c_j} of a polynomial matrix Σ_j c_j z^{j+shift}."""
    rows, cols = dm.shape
    out: dict[int, np.ndarray] = {}
    for r, row in enumerate(dm.to_list()):
        for c, p in enumerate(row):
            for j, value in laurent_coeffs(p, shift).items():
                if j not in out:
                    out[j] = np.array([[GaussianRational()] * cols for _ in range(rows)], dtype=object)
                out[j][r, c] = value
    return out
