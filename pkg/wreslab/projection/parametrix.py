# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
from __future__ import annotations

import numpy as np

import wreslab.config
from wreslab.core.trigpoly import TrigPoly
from wreslab.helpers import logging
from wreslab.helpers.exceptions import EllipticityError, StructuralError
from wreslab.symbol.calculus import compose, result_floor
from wreslab.symbol.classical import ClassicalSymbol
from wreslab.symbol.homogeneous import HomComponent

# Grid on which principal symbols are checked for pointwise invertibility
ELLIPTICITY_GRID = 65


def _pointwise_inverse(f: TrigPoly, side: str) -> TrigPoly:
    dets = np.linalg.det(f.on_grid(ELLIPTICITY_GRID))
    if np.min(np.abs(dets)) <= wreslab.config.spectral_gap:
        raise EllipticityError(f"Principal symbol is not invertible at ξ = {side}1")
    try:
        return f.inverse()
    except StructuralError as e:
        raise EllipticityError(f"Principal symbol at ξ = {side}1 has no usable inverse: {e}")


def invert_principal(c: HomComponent) -> HomComponent:
    """Pointwise inverse of a homogeneous component; degree −d.

    :raises EllipticityError: if c(x, ±1) is singular somewhere on the circle,
        or (exact mode) its inverse is not a trigonometric polynomial
    """
    return HomComponent(-c.d, _pointwise_inverse(c.plus, "+"), _pointwise_inverse(c.minus, "-"))


def parametrix(a: ClassicalSymbol, depth: int | None = None) -> ClassicalSymbol:
    """Symbol q with q#a ≡ 1 ≡ a#q down to the floor.

    q_{−m} = a_m^{−1}, and q_{−m−j} = −(degree −j part of q_{>−m−j}#a)·a_m^{−1},
    where q_{>−m−j} is the part of q already determined.

    :param depth: lowest degree to determine, at least a.floor − 2m
    :raises EllipticityError: if the principal symbol is not invertible
    """
    m = a.m
    inv = invert_principal(a.principal())
    attainable = None if a.floor is None else a.floor - 2 * m
    # Without lower terms, and with either no x-dependence or a_m locally
    # constant in ξ, the inverse of a_m is everything
    terminates = set(a.components) <= {m} and (m == 0 or a.is_x_independent())
    floor = result_floor(-m, attainable, depth, terminates, "parametrix")

    q = ClassicalSymbol(a.field, a.k, -m, None, [inv])
    if floor is None:
        return q

    for j in range(1, -m - floor + 1):
        remainder = compose(q, a, depth=-j).component(-j)
        if remainder.is_zero():
            continue
        logging.verbose(f"parametrix: filling degree {-m - j}")
        q = ClassicalSymbol(a.field, a.k, -m, None, [*q.components.values(), -(remainder * inv)])
    return q.with_floor(floor)
