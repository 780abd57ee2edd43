# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
from .principal import PrincipalProjection
from .parametrix import invert_principal, parametrix
from .lift import (
    StabilizedResidueReport,
    algebraic_lift,
    conjugated_lift,
    contour_lift,
    defect,
    newton_lift,
    self_adjointize,
    stabilized_residue_check,
)
from .spectral import first_order_system, positive_spectral_projection_symbol

__all__ = [
    "PrincipalProjection",
    "StabilizedResidueReport",
    "algebraic_lift",
    "conjugated_lift",
    "contour_lift",
    "defect",
    "first_order_system",
    "invert_principal",
    "newton_lift",
    "parametrix",
    "positive_spectral_projection_symbol",
    "self_adjointize",
    "stabilized_residue_check",
]
