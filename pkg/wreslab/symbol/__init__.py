# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
from .homogeneous import HomComponent
from .classical import ClassicalSymbol, block_sum, lower_floor
from .calculus import (
    TwoPointSymbol,
    adjoint,
    apply_to_function,
    change_of_frame,
    commutator,
    compose,
    compose_all,
    conjugate_by,
    left_reduce,
)

__all__ = [
    "ClassicalSymbol",
    "HomComponent",
    "TwoPointSymbol",
    "adjoint",
    "apply_to_function",
    "block_sum",
    "change_of_frame",
    "commutator",
    "compose",
    "compose_all",
    "conjugate_by",
    "left_reduce",
    "lower_floor",
]
