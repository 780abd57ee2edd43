# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
"""Wodzicki residue on S¹.

With counting measure on the co-sphere S⁰ = {±1} and Lebesgue measure dx on
[0, 2π), the residue density of a is tr a_{−1}(x, +1) + tr a_{−1}(x, −1). wres
returns its mean r; the geometric residue is 2π·r.
"""

from __future__ import annotations

from dataclasses import dataclass
import math
from typing import Any

from wreslab.core.scalar import Scalar
from wreslab.core.trigpoly import TrigPoly
from wreslab.helpers.exceptions import PrecisionError, StructuralError
from wreslab.symbol.classical import ClassicalSymbol

# Degree of the component that carries the residue in dimension one
RESIDUE_DEGREE = -1


def wres_density(a: ClassicalSymbol) -> TrigPoly:
    """Scalar TrigPoly x ↦ tr a_{−1}(x, +1) + tr a_{−1}(x, −1).

    :raises PrecisionError: if the degree −1 component is not determined
    """
    if a.floor is not None and a.floor > RESIDUE_DEGREE:
        raise PrecisionError(
            f"Degree {RESIDUE_DEGREE} component not determined (floor is {a.floor})", a.floor
        )
    if a.m < RESIDUE_DEGREE:
        return TrigPoly.zero(a.field, 1)
    c = a.component(RESIDUE_DEGREE)
    return c.plus.trace() + c.minus.trace()


def wres(a: ClassicalSymbol) -> Scalar:
    """Zeroth Fourier coefficient r of the residue density (WRes = 2π·r)."""
    return wres_density(a).mean()[0, 0]


def geometric(r: Scalar) -> complex:
    """2π·r, which leaves the exact field."""
    return 2 * math.pi * complex(r)


@dataclass
class ResidueReport:
    r: Scalar
    density: TrigPoly

    @property
    def density_max_abs(self) -> float:
        return self.density.max_abs()

    def pointwise_vanishing(self) -> bool:
        return self.density.is_zero()

    def as_dict(self, geometric_residue: bool = False) -> dict[str, Any]:
        """JSON-ready form; scalars are encoded by the field."""
        from wreslab.parse.symbolfile import encode_trigpoly

        field = self.density.field
        out: dict[str, Any] = {
            "r": field.encode(self.r),
            "density": encode_trigpoly(self.density),
            "density_max_abs": self.density_max_abs,
            "truncated": self.density.truncated,
        }
        if geometric_residue:
            if field.exact:
                raise StructuralError("The geometric residue 2πr is only available in f64 mode")
            g = geometric(self.r)
            out["wres"] = {"re": g.real, "im": g.imag}
        return out


def residue_report(a: ClassicalSymbol) -> ResidueReport:
    density = wres_density(a)
    return ResidueReport(density.mean()[0, 0], density)
