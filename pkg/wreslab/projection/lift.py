# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
"""Lifting idempotent principal symbols to projections modulo smoothing."""

from __future__ import annotations

from dataclasses import dataclass
import math

import numpy as np

import wreslab.config
from wreslab.core.scalar import F64, Scalar
from wreslab.core.trigpoly import TrigPoly
from wreslab.helpers import logging
from wreslab.helpers.exceptions import ConditioningError, PreconditionError, StructuralError
from wreslab.projection.parametrix import parametrix
from wreslab.projection.principal import (
    PrincipalProjection,
    component_is_idempotent,
    component_is_self_adjoint,
)
from wreslab.residue.wres import wres
from wreslab.symbol.calculus import adjoint, compose, conjugate_by
from wreslab.symbol.classical import ClassicalSymbol


def newton_steps(depth: int) -> int:
    """Steps of X ← 3X² − 2X³ that push a defect of order −1 below depth.

    f(x)² − f(x) = (x² − x)²(4x² − 4x − 3), so each step doubles the order of
    the defect X#X − X: −1, −2, −4, ...
    """
    if depth >= 0:
        return 0
    return (-depth).bit_length()


def defect(x: ClassicalSymbol, depth: int | None = None) -> ClassicalSymbol:
    """X#X − X"""
    return compose(x, x, depth) - x


def _defect_vanishes(d: ClassicalSymbol) -> bool:
    if d.field.exact:
        return not d.components
    return all(
        c.plus.max_abs() <= d.field.tol and c.minus.max_abs() <= d.field.tol
        for c in d.components.values()
    )


def newton_lift(x0: ClassicalSymbol, depth: int) -> ClassicalSymbol:
    """Projection P with P#P = P down to depth and σ₀(P) = σ₀(x0).

    :param x0: order-0 symbol whose principal part is idempotent
    :param depth: lowest degree to determine
    :raises PreconditionError: if x0 is not of order 0 or σ₀(x0) is not idempotent
    """
    if x0.m != 0:
        raise PreconditionError(f"Only order-0 symbols can be lifted, got order {x0.m}")
    if not component_is_idempotent(x0.principal()):
        raise PreconditionError("Principal symbol is not idempotent")
    x = x0.with_floor(depth)
    steps = newton_steps(depth)
    for step in range(steps):
        square = compose(x, x, depth)
        if _defect_vanishes(square - x):
            logging.verbose(f"newton_lift: idempotent after {step} steps")
            break
        cube = compose(square, x, depth)
        x = square.scale(3) - cube.scale(2)
        logging.verbose(f"newton_lift: step {step + 1}/{steps}, defect order {-(2 ** (step + 1))}")
    return x


def algebraic_lift(p: PrincipalProjection, depth: int) -> ClassicalSymbol:
    """Newton lift of p, embedded as an order-0 symbol without lower terms."""
    return newton_lift(p.as_symbol(), depth)


def _principal_eigenvalues(p1: ClassicalSymbol, grid: int) -> np.ndarray:
    c = p1.principal()
    return np.concatenate(
        [np.linalg.eigvals(c.plus.on_grid(grid)).ravel(), np.linalg.eigvals(c.minus.on_grid(grid)).ravel()]
    )


def contour_lift(p1: ClassicalSymbol, depth: int, nodes: int = 128, grid: int = 33) -> ClassicalSymbol:
    """Riesz projection P = (1/2πi)∮ Q(λ) dλ over |λ − 1| = 1/2, Q(λ) the
    parametrix of λ − p1, by the trapezoid rule at `nodes` points.

    With λ_n = 1 + ½e^{iθ_n} and dλ = i(λ − 1)dθ the rule reads
    P ≈ (1/N) Σ_n Q(λ_n)(λ_n − 1). Runs in f64 mode; exact input is cast.

    :raises ConditioningError: if a principal eigenvalue of p1 comes within
        the contour clearance of the circle
    """
    if p1.m != 0:
        raise PreconditionError(f"Only order-0 symbols can be lifted, got order {p1.m}")
    if p1.field.exact:
        p1 = p1.cast(F64)
    center, radius = wreslab.config.contour_center, wreslab.config.contour_radius
    eigenvalues = _principal_eigenvalues(p1, grid)
    clearance = np.min(np.abs(np.abs(eigenvalues - center) - radius))
    if clearance < wreslab.config.contour_clearance:
        raise ConditioningError(
            f"Principal eigenvalue within {clearance:.3g} of the contour"
            f" (need {wreslab.config.contour_clearance})"
        )

    logging.debug(f"contour_lift: {nodes} quadrature nodes, depth {depth}")
    one = ClassicalSymbol.identity(F64, p1.k)
    total: ClassicalSymbol | None = None
    # Fixed summation order keeps float results reproducible
    for n in range(nodes):
        shift = radius * complex(math.cos(2 * math.pi * n / nodes), math.sin(2 * math.pi * n / nodes))
        lam = center + shift
        q = parametrix(one.scale(lam) - p1, depth)
        term = q.scale(shift / nodes)
        total = term if total is None else total + term
    assert total is not None
    return total


def self_adjointize(p: ClassicalSymbol, depth: int) -> ClassicalSymbol:
    """Self-adjoint projection with the same principal symbol: Newton lift of P*#P.

    :raises PreconditionError: if σ₀(P) is not self-adjoint
    """
    if not component_is_self_adjoint(p.principal()):
        raise PreconditionError("Principal symbol is not self-adjoint")
    return newton_lift(compose(adjoint(p, depth), p, depth), depth)


@dataclass
class StabilizedResidueReport:
    r: Scalar
    r_stabilized: Scalar
    r_conjugated: Scalar
    exact: bool = True

    @property
    def ok(self) -> bool:
        if self.exact:
            return self.r == self.r_stabilized == self.r_conjugated
        tol = wreslab.config.scalar_tol
        return abs(self.r - self.r_stabilized) <= tol and abs(self.r - self.r_conjugated) <= tol


def stabilized_residue_check(
    p: PrincipalProjection, u: TrigPoly, m: int, depth: int
) -> StabilizedResidueReport:
    """Compare wres of the lifts of p, p ⊕ 0_m and u(p ⊕ 0_m)u^{−1}.

    The residue of a lifted projection only depends on the K-theory class of
    its principal symbol, so all three must agree.

    :param u: (k+m)×(k+m) TrigPoly with TrigPoly inverse
    """
    if u.k != p.k + m:
        raise StructuralError(f"Conjugating unit has k={u.k}, expected {p.k + m}")
    lift = algebraic_lift(p, depth)
    stable = p.block_sum(PrincipalProjection.zero(p.field, m)) if m else p
    lift_stable = algebraic_lift(stable, depth)
    lift_conjugated = algebraic_lift(stable.conjugate(u), depth)
    report = StabilizedResidueReport(
        wres(lift), wres(lift_stable), wres(lift_conjugated), p.field.exact
    )
    logging.verbose(f"stabilized residues: {report}")
    return report


def conjugated_lift(p: PrincipalProjection, u: TrigPoly, depth: int) -> ClassicalSymbol:
    """u·lift(p)·u^{−1}, which is a lift of u p u^{−1} as well."""
    return conjugate_by(u, algebraic_lift(p, depth), depth)
