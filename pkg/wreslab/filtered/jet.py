# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
"""Mat(k) over scalars[t]/(t^N), the filtered ring L ⊃ L⁻¹ ⊃ ... ⊃ L⁻ᴺ = 0.

L⁻ʲ consists of the jets whose coefficients A_0, ..., A_{j−1} vanish.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
import enum

import numpy as np

from wreslab.core.scalar import Field, Scalar
from wreslab.helpers.exceptions import StructuralError


class MatrixJet:
    """A = Σ_{j<N} A_j t^j with k×k coefficients A_j."""

    __slots__ = ("field", "k", "N", "coeffs")

    def __init__(self, field: Field, k: int, N: int, coeffs: Sequence[np.ndarray]) -> None:
        if k < 1 or N < 1:
            raise StructuralError(f"Need positive k and N, got k={k}, N={N}")
        if len(coeffs) != N:
            raise StructuralError(f"Expected {N} coefficients, got {len(coeffs)}")
        for j, c in enumerate(coeffs):
            if c.shape != (k, k):
                raise StructuralError(f"Coefficient {j} has shape {c.shape}, expected {(k, k)}")
        self.field = field
        self.k = k
        self.N = N
        self.coeffs = list(coeffs)

    # Constructors

    @classmethod
    def zero(cls, field: Field, k: int, N: int) -> MatrixJet:
        return cls(field, k, N, [field.zeros(k) for _ in range(N)])

    @classmethod
    def identity(cls, field: Field, k: int, N: int) -> MatrixJet:
        return cls.constant(field, N, field.eye(k))

    @classmethod
    def constant(cls, field: Field, N: int, matrix: np.ndarray) -> MatrixJet:
        return cls.monomial(field, N, 0, matrix)

    @classmethod
    def monomial(cls, field: Field, N: int, level: int, matrix: np.ndarray) -> MatrixJet:
        """matrix·t^level (zero when level ≥ N)."""
        k = matrix.shape[0]
        coeffs = [field.zeros(k) for _ in range(N)]
        if level < N:
            coeffs[level] = matrix
        return cls(field, k, N, coeffs)

    @classmethod
    def from_terms(cls, field: Field, k: int, N: int, terms: dict[int, np.ndarray]) -> MatrixJet:
        out = cls.zero(field, k, N)
        for level, matrix in terms.items():
            out = out + cls.monomial(field, N, level, matrix)
        return out

    # Queries

    def level(self, tol: float | None = None) -> int:
        """Filtration level: smallest j with A_j ≠ 0, N if A = 0."""
        for j, c in enumerate(self.coeffs):
            if not self.field.is_zero_matrix(c, tol=tol):
                return j
        return self.N

    def is_zero(self) -> bool:
        return self.level() == self.N

    def max_abs(self) -> float:
        return max(self.field.max_abs(c) for c in self.coeffs)

    # Ring operations

    def _check(self, other: MatrixJet) -> None:
        if other.field != self.field:
            raise StructuralError(f"Field mismatch: {self.field} vs {other.field}")
        if other.k != self.k:
            raise StructuralError(f"Dimension mismatch: {self.k} vs {other.k}")
        if other.N != self.N:
            raise StructuralError(f"Depth mismatch: {self.N} vs {other.N}")

    def __add__(self, other: MatrixJet) -> MatrixJet:
        self._check(other)
        return MatrixJet(self.field, self.k, self.N, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: MatrixJet) -> MatrixJet:
        self._check(other)
        return MatrixJet(self.field, self.k, self.N, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> MatrixJet:
        return MatrixJet(self.field, self.k, self.N, [-a for a in self.coeffs])

    def scale(self, s: Scalar) -> MatrixJet:
        s = self.field.scalar(s)
        return MatrixJet(self.field, self.k, self.N, [s * a for a in self.coeffs])

    def __mul__(self, other: MatrixJet) -> MatrixJet:
        """Truncated product (AB)_j = Σ_{a+b=j} A_a B_b."""
        self._check(other)
        out = [self.field.zeros(self.k) for _ in range(self.N)]
        # skip levels below the known filtration to keep products cheap
        la, lb = self.level(tol=0.0), other.level(tol=0.0)
        for a in range(la, self.N):
            for b in range(lb, self.N - a):
                out[a + b] = out[a + b] + self.coeffs[a] @ other.coeffs[b]
        return MatrixJet(self.field, self.k, self.N, out)

    def __pow__(self, n: int) -> MatrixJet:
        out = MatrixJet.identity(self.field, self.k, self.N)
        for _ in range(n):
            out = out * self
        return out

    def commutator(self, other: MatrixJet) -> MatrixJet:
        return self * other - other * self

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatrixJet):
            return NotImplemented
        if (other.field, other.k, other.N) != (self.field, self.k, self.N):
            return False
        return all(
            self.field.is_zero_matrix(a - b, tol=0.0) for a, b in zip(self.coeffs, other.coeffs)
        )

    __hash__ = None  # type: ignore[assignment]

    def isclose(self, other: MatrixJet, tol: float) -> bool:
        diff = self - other
        if self.field.exact:
            return diff.is_zero()
        return diff.max_abs() <= tol

    def __repr__(self) -> str:
        terms = ", ".join(f"t^{j}: {c.tolist()}" for j, c in enumerate(self.coeffs) if c.any())
        return f"MatrixJet(k={self.k}, N={self.N}, {{{terms}}})"


class JetOp(enum.Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    COMMUTATOR = "commutator"


def jet_ring_ops(a: MatrixJet, b: MatrixJet, which: JetOp | str) -> MatrixJet:
    """One truncated ring operation; levels obey level(AB) ≥ level(A) + level(B)."""
    match JetOp(which):
        case JetOp.ADD:
            return a + b
        case JetOp.SUB:
            return a - b
        case JetOp.MUL:
            return a * b
        case JetOp.COMMUTATOR:
            return a.commutator(b)


def jet_product(factors: Iterable[MatrixJet]) -> MatrixJet:
    it = iter(factors)
    out = next(it)
    for f in it:
        out = out * f
    return out
