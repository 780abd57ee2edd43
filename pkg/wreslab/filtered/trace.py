# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
from __future__ import annotations

from dataclasses import dataclass

from wreslab.core.scalar import Scalar
from wreslab.helpers.exceptions import StructuralError

from .jet import MatrixJet


@dataclass(frozen=True)
class ResidueTraceSpec:
    """τ_j(A) = tr A_j, a trace that vanishes on L^{−(j+1)}."""

    j: int

    def __post_init__(self) -> None:
        if self.j < 0:
            raise StructuralError(f"Trace index must be nonnegative, got {self.j}")


def residue_trace(a: MatrixJet, spec: ResidueTraceSpec) -> Scalar:
    if spec.j >= a.N:
        raise StructuralError(f"τ_{spec.j} is not defined on jets of depth {a.N}")
    c = a.coeffs[spec.j]
    out = a.field.zero
    for i in range(a.k):
        out = out + c[i, i]
    return out


def all_traces(a: MatrixJet) -> list[Scalar]:
    """τ_0(A), ..., τ_{N−1}(A)."""
    return [residue_trace(a, ResidueTraceSpec(j)) for j in range(a.N)]
