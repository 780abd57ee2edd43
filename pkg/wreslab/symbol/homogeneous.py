# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
"""Homogeneous symbol components on the co-sphere S⁰ = {ξ = +1, ξ = −1}."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from wreslab.core.scalar import Field, Scalar
from wreslab.core.trigpoly import TrigPoly
from wreslab.helpers.exceptions import StructuralError


@dataclass(frozen=True, eq=False)
class HomComponent:
    """a(x, ξ) = plus(x)·ξ^d for ξ > 0 and minus(x)·(−ξ)^d for ξ < 0.

    Homogeneity a(x, tξ) = t^d a(x, ξ), t > 0, holds by construction.
    """

    d: int
    plus: TrigPoly
    minus: TrigPoly

    def __post_init__(self) -> None:
        if self.plus.k != self.minus.k or self.plus.field != self.minus.field:
            raise StructuralError("Both halves of a homogeneous component need the same shape")

    @property
    def field(self) -> Field:
        return self.plus.field

    @property
    def k(self) -> int:
        return self.plus.k

    @property
    def truncated(self) -> bool:
        return self.plus.truncated or self.minus.truncated

    @classmethod
    def zero(cls, field: Field, k: int, d: int) -> HomComponent:
        return cls(d, TrigPoly.zero(field, k), TrigPoly.zero(field, k))

    @classmethod
    def xi_power(cls, field: Field, k: int, d: int, f: TrigPoly | None = None) -> HomComponent:
        """f(x)·ξ^d, i.e. minus = (−1)^d plus."""
        f = f if f is not None else TrigPoly.identity(field, k)
        return cls(d, f, f if d % 2 == 0 else -f)

    @classmethod
    def abs_xi_power(cls, field: Field, k: int, d: int, f: TrigPoly | None = None) -> HomComponent:
        """f(x)·|ξ|^d"""
        f = f if f is not None else TrigPoly.identity(field, k)
        return cls(d, f, f)

    @classmethod
    def constant(cls, field: Field, d: int, plus: np.ndarray, minus: np.ndarray) -> HomComponent:
        return cls(d, TrigPoly.constant(field, plus), TrigPoly.constant(field, minus))

    def is_zero(self) -> bool:
        return self.plus.is_zero() and self.minus.is_zero()

    def is_x_independent(self) -> bool:
        return self.plus.is_constant() and self.minus.is_constant()

    def is_polynomial(self) -> bool:
        """True when a(x, ξ) is c(x)·ξ^d for one function c, with d ≥ 0."""
        if self.is_zero():
            return True
        if self.d < 0:
            return False
        return self.minus == (self.plus if self.d % 2 == 0 else -self.plus)

    def _check(self, other: HomComponent) -> None:
        if other.d != self.d:
            raise StructuralError(f"Degree mismatch: {self.d} vs {other.d}")

    def __add__(self, other: HomComponent) -> HomComponent:
        self._check(other)
        return HomComponent(self.d, self.plus + other.plus, self.minus + other.minus)

    def __sub__(self, other: HomComponent) -> HomComponent:
        self._check(other)
        return HomComponent(self.d, self.plus - other.plus, self.minus - other.minus)

    def __neg__(self) -> HomComponent:
        return HomComponent(self.d, -self.plus, -self.minus)

    def __mul__(self, other: HomComponent) -> HomComponent:
        """Pointwise product; degrees add."""
        return HomComponent(self.d + other.d, self.plus * other.plus, self.minus * other.minus)

    def scale(self, s: Scalar) -> HomComponent:
        return HomComponent(self.d, self.plus.scale(s), self.minus.scale(s))

    def left_mul(self, f: TrigPoly) -> HomComponent:
        return HomComponent(self.d, f * self.plus, f * self.minus)

    def right_mul(self, f: TrigPoly) -> HomComponent:
        return HomComponent(self.d, self.plus * f, self.minus * f)

    def xi_derivative(self) -> HomComponent:
        """∂_ξ: (plus, minus)_d ↦ (d·plus, −d·minus)_{d−1}.

        Degree-0 components are locally constant in ξ and map to zero.
        """
        d = self.d
        return HomComponent(d - 1, self.plus.scale(d), self.minus.scale(-d))

    def dx(self, power: int = 1) -> HomComponent:
        return HomComponent(self.d, self.plus.dx(power), self.minus.dx(power))

    def adjoint(self) -> HomComponent:
        """Pointwise conjugate transpose; ξ is real so the degree is kept."""
        return HomComponent(self.d, self.plus.adjoint(), self.minus.adjoint())

    def trace(self) -> HomComponent:
        return HomComponent(self.d, self.plus.trace(), self.minus.trace())

    def block_sum(self, other: HomComponent) -> HomComponent:
        self._check(other)
        return HomComponent(self.d, self.plus.block_sum(other.plus), self.minus.block_sum(other.minus))

    def cast(self, field: Field) -> HomComponent:
        return HomComponent(self.d, self.plus.cast(field), self.minus.cast(field))

    def isclose(self, other: HomComponent, tol: float) -> bool:
        return (
            self.d == other.d
            and self.plus.isclose(other.plus, tol)
            and self.minus.isclose(other.minus, tol)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HomComponent):
            return NotImplemented
        return self.d == other.d and self.plus == other.plus and self.minus == other.minus

    __hash__ = None  # type: ignore[assignment]
