# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
"""Idempotent principal symbols on the co-sphere."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

import wreslab.config
from wreslab.core import Config
from wreslab.core.context import get_context
from wreslab.core.scalar import Field
from wreslab.core.trigpoly import TrigPoly
from wreslab.helpers.exceptions import PreconditionError, StructuralError
from wreslab.symbol.classical import ClassicalSymbol
from wreslab.symbol.homogeneous import HomComponent


def check_grid(p: TrigPoly) -> int:
    """Nodes for float checks of quadratic expressions in p.

    p² has Fourier degree 2J, so fewer than 4J + 1 nodes alias. The
    configured grid is a lower bound.
    """
    context = get_context(allow_failure=True)
    grid = context.config.grid if context is not None else Config.grid
    n = max(4 * max(p.J, 1) + 1, grid)
    return n if n % 2 else n + 1


def is_idempotent(p: TrigPoly) -> bool:
    """p² = p, exactly or to the scalar tolerance on the check grid of p.

    Float-mode symbols often come from truncated Fourier fits, so their
    coefficients are not compared in that case.
    """
    if p.field.exact:
        return p * p == p
    values = p.on_grid(check_grid(p))
    return bool(np.max(np.abs(values @ values - values)) <= wreslab.config.scalar_tol)


def is_self_adjoint(p: TrigPoly) -> bool:
    if p.field.exact:
        return p.adjoint() == p
    values = p.on_grid(check_grid(p))
    return bool(
        np.max(np.abs(values - np.conjugate(np.swapaxes(values, 1, 2))))
        <= wreslab.config.scalar_tol
    )


def component_is_idempotent(c: HomComponent) -> bool:
    return c.d == 0 and is_idempotent(c.plus) and is_idempotent(c.minus)


def component_is_self_adjoint(c: HomComponent) -> bool:
    return is_self_adjoint(c.plus) and is_self_adjoint(c.minus)


@dataclass(frozen=True)
class PrincipalProjection:
    """Values p(x, +1), p(x, −1) of an idempotent order-0 principal symbol.

    :raises PreconditionError: if either half is not idempotent
    """

    p_plus: TrigPoly
    p_minus: TrigPoly

    def __post_init__(self) -> None:
        if self.p_plus.k != self.p_minus.k or self.p_plus.field != self.p_minus.field:
            raise StructuralError("p_plus and p_minus must share k and the field")
        for name, p in (("p_plus", self.p_plus), ("p_minus", self.p_minus)):
            if not is_idempotent(p):
                raise PreconditionError(f"{name} is not idempotent")

    @property
    def field(self) -> Field:
        return self.p_plus.field

    @property
    def k(self) -> int:
        return self.p_plus.k

    def is_self_adjoint(self) -> bool:
        return is_self_adjoint(self.p_plus) and is_self_adjoint(self.p_minus)

    def component(self) -> HomComponent:
        return HomComponent(0, self.p_plus, self.p_minus)

    def as_symbol(self) -> ClassicalSymbol:
        """Embed p as a complete order-0 symbol without lower terms."""
        return ClassicalSymbol(self.field, self.k, 0, None, [self.component()])

    def block_sum(self, other: PrincipalProjection) -> PrincipalProjection:
        return PrincipalProjection(
            self.p_plus.block_sum(other.p_plus), self.p_minus.block_sum(other.p_minus)
        )

    def conjugate(self, u: TrigPoly) -> PrincipalProjection:
        """u p u^{−1} for a TrigPoly u with TrigPoly inverse."""
        inv = u.inverse()
        return PrincipalProjection(u * self.p_plus * inv, u * self.p_minus * inv)

    def cast(self, field: Field) -> PrincipalProjection:
        return PrincipalProjection(self.p_plus.cast(field), self.p_minus.cast(field))

    # Fixtures

    @classmethod
    def constant(cls, field: Field, p: np.ndarray) -> PrincipalProjection:
        return cls(TrigPoly.constant(field, p), TrigPoly.constant(field, p))

    @classmethod
    def zero(cls, field: Field, k: int) -> PrincipalProjection:
        return cls(TrigPoly.zero(field, k), TrigPoly.zero(field, k))

    @classmethod
    def szego(cls, field: Field, k: int = 1) -> PrincipalProjection:
        """Heaviside function of ξ: 1 for ξ > 0, 0 for ξ < 0."""
        return cls(TrigPoly.identity(field, k), TrigPoly.zero(field, k))

    @classmethod
    def winding(cls, field: Field, n: int = 1) -> PrincipalProjection:
        """p = (1 + s)/2 with s(x, ±1) = cos(nx)σ₃ ± sin(nx)σ₁, so s² = 1."""
        half = field.rational(1, 2)
        sigma1 = field.matrix([[0, 1], [1, 0]])
        sigma3 = field.matrix([[1, 0], [0, -1]])
        c = TrigPoly.cos(field, n, sigma3)
        s = TrigPoly.sin(field, n, sigma1)
        one = TrigPoly.identity(field, 2)
        return cls((one + c + s).scale(half), (one + c - s).scale(half))
