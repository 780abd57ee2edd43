# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
"""Composition, adjoint and left reduction of classical symbols on S¹.

All expansions are finite sums over γ of terms (1/γ!) ∂_ξ^γ(·) D^γ(·). The
degree of the γ-th term drops by γ, so an expansion is cut off as soon as the
degree falls below the result floor, or terminates by itself when the ξ-side
is polynomial or the x-side is constant.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
import math

import numpy as np

from wreslab.core.scalar import Field
from wreslab.core.trigpoly import TrigPoly
from wreslab.helpers import logging
from wreslab.helpers.exceptions import (
    PreconditionError,
    PrecisionError,
    StructuralError,
    UnsupportedOracleError,
)
from wreslab.symbol.classical import ClassicalSymbol, lower_floor
from wreslab.symbol.homogeneous import HomComponent

# Pointwise unitarity checks on non-exact input use this tolerance
UNITARY_TOL = 1e-10


def result_floor(m: int, attainable: int | None, depth: int | None, terminates: bool, what: str) -> int | None:
    """Floor of a result of order m.

    :param attainable: tightest floor the inputs determine, None if unbounded
    :param depth: requested lowest degree, None for "as deep as possible"
    :param terminates: whether the expansion is finite when attainable is None
    :raises PrecisionError: if depth lies below attainable, or no depth was
        given for an infinite expansion
    """
    if depth is None:
        if attainable is None and not terminates:
            raise PrecisionError(f"{what}: the expansion does not terminate, a depth is required")
        return attainable if attainable is None else min(attainable, m)
    if attainable is not None and depth < attainable:
        raise PrecisionError(
            f"{what}: requested depth {depth} lies below the attainable floor {attainable}",
            attainable,
        )
    return min(depth, m)


def _factorial_inverse(field: Field, gamma: int):
    return field.rational(1, math.factorial(gamma))


def _check_pair(a: ClassicalSymbol, b: ClassicalSymbol) -> None:
    if a.field != b.field:
        raise StructuralError(f"Field mismatch: {a.field} vs {b.field}")
    if a.k != b.k:
        raise StructuralError(f"Dimension mismatch: {a.k} vs {b.k}")


def _accumulate(out: dict[int, HomComponent], c: HomComponent) -> None:
    if c.is_zero():
        return
    out[c.d] = out[c.d] + c if c.d in out else c


def compose(a: ClassicalSymbol, b: ClassicalSymbol, depth: int | None = None) -> ClassicalSymbol:
    """Left symbol of the product: a#b ~ Σ_γ (1/γ!) ∂_ξ^γ a · D_x^γ b.

    :param depth: lowest degree to determine, None for the attainable floor
    :raises PrecisionError: if depth lies below max(a.floor + b.m, a.m + b.floor)
    """
    _check_pair(a, b)
    m = a.m + b.m
    attainable = lower_floor(
        None if a.floor is None else a.floor + b.m,
        None if b.floor is None else a.m + b.floor,
    )
    terminates = a.is_xi_polynomial() or b.is_x_independent()
    floor = result_floor(m, attainable, depth, terminates, "compose")

    out: dict[int, HomComponent] = {}
    for ca in a.components.values():
        for cb in b.components.values():
            da, db = ca, cb
            gamma = 0
            while floor is None or ca.d + cb.d - gamma >= floor:
                if da.is_zero() or db.is_zero():
                    break
                term = da * db
                if gamma:
                    term = term.scale(_factorial_inverse(a.field, gamma))
                _accumulate(out, term)
                gamma += 1
                da = da.xi_derivative()
                db = db.dx()
    return ClassicalSymbol(a.field, a.k, m, floor, out)


def commutator(a: ClassicalSymbol, b: ClassicalSymbol, depth: int | None = None) -> ClassicalSymbol:
    """[a, b] = a#b − b#a"""
    return compose(a, b, depth) - compose(b, a, depth)


def compose_all(factors: Iterable[ClassicalSymbol], depth: int | None = None) -> ClassicalSymbol:
    it = iter(factors)
    out = next(it)
    for f in it:
        out = compose(out, f, depth)
    return out


def adjoint(a: ClassicalSymbol, depth: int | None = None) -> ClassicalSymbol:
    """Symbol of the formal adjoint: a* ~ Σ_γ (1/γ!) ∂_ξ^γ D_x^γ (a†)."""
    floor = result_floor(
        a.m, a.floor, depth, a.is_xi_polynomial() or a.is_x_independent(), "adjoint"
    )
    out: dict[int, HomComponent] = {}
    for c in a.components.values():
        term = c.adjoint()
        gamma = 0
        while floor is None or c.d - gamma >= floor:
            if term.is_zero():
                break
            _accumulate(out, term.scale(_factorial_inverse(a.field, gamma)) if gamma else term)
            gamma += 1
            term = term.xi_derivative().dx()
    return ClassicalSymbol(a.field, a.k, a.m, floor, out)


@dataclass(frozen=True)
class TwoPointSymbol:
    """Σ_i left_i(x) · core_i(x, ξ) · right_i(y), an amplitude in (x, y, ξ)."""

    terms: tuple[tuple[TrigPoly, ClassicalSymbol, TrigPoly], ...]

    def __post_init__(self) -> None:
        if not self.terms:
            raise StructuralError("A two-point symbol needs at least one term")
        _, core, _ = self.terms[0]
        for left, c, right in self.terms:
            if left.k != core.k or c.k != core.k or right.k != core.k:
                raise StructuralError("All factors of a two-point symbol must share k")
            if left.field != core.field or c.field != core.field or right.field != core.field:
                raise StructuralError("All factors of a two-point symbol must share the field")

    @classmethod
    def single(cls, left: TrigPoly, core: ClassicalSymbol, right: TrigPoly) -> TwoPointSymbol:
        return cls(((left, core, right),))

    @property
    def field(self) -> Field:
        return self.terms[0][1].field

    @property
    def k(self) -> int:
        return self.terms[0][1].k


def left_reduce(a: TwoPointSymbol, depth: int | None = None) -> ClassicalSymbol:
    """Left symbol a_L ~ Σ_γ (1/γ!) ∂_ξ^γ D_y^γ a(x, y, ξ)|_{y=x}."""
    m = max(core.m for _, core, _ in a.terms)
    attainable = lower_floor(*(core.floor for _, core, _ in a.terms))
    terminates = all(
        core.is_xi_polynomial() or right.is_constant() for _, core, right in a.terms
    )
    floor = result_floor(m, attainable, depth, terminates, "left_reduce")

    out: dict[int, HomComponent] = {}
    for left, core, right in a.terms:
        for c in core.components.values():
            dc, dr = c, right
            gamma = 0
            while floor is None or c.d - gamma >= floor:
                if dc.is_zero() or dr.is_zero():
                    break
                term = dc.left_mul(left).right_mul(dr)
                if gamma:
                    term = term.scale(_factorial_inverse(a.field, gamma))
                _accumulate(out, term)
                gamma += 1
                dc = dc.xi_derivative()
                dr = dr.dx()
    return ClassicalSymbol(a.field, a.k, m, floor, out)


def scalar_times_identity(g: TrigPoly, k: int) -> TrigPoly:
    """Embed a 1×1 TrigPoly g as g·I_k."""
    if g.k != 1:
        raise StructuralError(f"Expected a scalar function, got k={g.k}")
    eye = g.field.eye(k)
    return TrigPoly(g.field, k, {j: c[0, 0] * eye for j, c in g.coeffs.items()}, g.truncated)


def _is_identity(f: TrigPoly, tol: float) -> bool:
    return f.isclose(TrigPoly.identity(f.field, f.k), tol)


def check_unitary(phi: TrigPoly, special: bool = False, what: str = "phi") -> None:
    """Check φφ† = I (and det φ = 1) exactly, or to UNITARY_TOL in f64 mode.

    :raises PreconditionError: if the check fails
    """
    if not _is_identity(phi * phi.adjoint(), UNITARY_TOL):
        raise PreconditionError(f"{what} is not pointwise unitary")
    if special and not _is_identity(phi.det(), UNITARY_TOL):
        raise PreconditionError(f"{what} does not have determinant 1")


def change_of_frame(
    a: ClassicalSymbol, g: TrigPoly, phi: TrigPoly, depth: int | None = None
) -> ClassicalSymbol:
    """Re-express a in the frame (λ, φ) with λ(x, y) = g(x)g(y)^{−1}.

    The operator is conjugated by multiplication with g·φ, so the new symbol is
    the left reduction of g(x)φ(x) a(x, ξ) conj(g(y)) φ(y)†.

    :param g: scalar function with |g| = 1
    :param phi: k×k function with values in SU(k)
    :raises PreconditionError: if g is not unimodular or phi not special unitary
    """
    if g.field != a.field or phi.field != a.field:
        raise StructuralError("Frame data and symbol must share the field")
    if phi.k != a.k:
        raise StructuralError(f"Frame has k={phi.k}, symbol has k={a.k}")
    check_unitary(g, what="g")
    check_unitary(phi, special=True)
    gk = scalar_times_identity(g, a.k)
    left = gk * phi
    right = gk.adjoint() * phi.adjoint()
    logging.verbose(f"Change of frame for {a!r}")
    return left_reduce(TwoPointSymbol.single(left, a, right), depth)


def conjugate_by(u: TrigPoly, a: ClassicalSymbol, depth: int | None = None) -> ClassicalSymbol:
    """Symbol of u A u^{−1} for a pointwise invertible TrigPoly u."""
    return left_reduce(TwoPointSymbol.single(u, a, u.inverse()), depth)


def apply_to_function(a: ClassicalSymbol, u: TrigPoly) -> TrigPoly:
    """Exact action of a differential operator on a trigonometric polynomial.

    For a(x, ξ) = Σ_d c_d(x) ξ^d the operator is Σ_d c_d(x) D_x^d.

    :raises UnsupportedOracleError: if a is not polynomial in ξ
    """
    if not a.is_polynomial():
        raise UnsupportedOracleError(
            "Operator action is only available for complete symbols polynomial in ξ"
        )
    if u.field != a.field or u.k != a.k:
        raise StructuralError("Symbol and function must share k and the field")
    out = TrigPoly.zero(a.field, a.k)
    for c in a.components.values():
        out = out + c.plus * u.dx(c.d)
    return out


def evaluate(a: ClassicalSymbol, x: float, xi: float) -> np.ndarray:
    """Value of the truncated expansion Σ_d a_d(x, ξ) at one point, ξ ≠ 0."""
    out = np.zeros((a.k, a.k), dtype=np.complex128)
    for c in a.components.values():
        half = c.plus if xi > 0 else c.minus
        out += abs(xi) ** c.d * half.evaluate(x)
    return out
