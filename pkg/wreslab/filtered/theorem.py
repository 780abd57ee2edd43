# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
"""Residue traces of idempotents only depend on the idempotent modulo L⁻¹.

For idempotents P, P̃ with R = P̃ − P ∈ L⁻¹ put

    A = PRP,  B = PR(1−P),  C = (1−P)RP,  D = (1−P)R(1−P).

Idempotency of P̃ gives A² + A + BC = 0 and D² − D + CB = 0. Solving these by
successive substitution writes A and −D as power series in BC and CB, so

    A + D ≡ Σ c_k [B, (CB)^{k−1} C]

and τ(P̃) − τ(P) = τ(A + D) vanishes for every trace τ killing L⁻ᴺ.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from sympy import catalan as sympy_catalan
from sympy.polys.domains import ZZ
from sympy.polys.ring_series import rs_mul
from sympy.polys.rings import ring

import wreslab.config
from wreslab.core.scalar import Scalar
from wreslab.helpers import logging
from wreslab.helpers.exceptions import PreconditionError, StructuralError

from .idempotent import idempotent_defect
from .jet import MatrixJet
from .trace import ResidueTraceSpec, residue_trace

# formal power series in y over ℤ
SERIES, Y = ring("y", ZZ)


def _tol(x: MatrixJet) -> float | None:
    return None if x.field.exact else wreslab.config.scalar_tol


def abcd_decompose(p: MatrixJet, ptilde: MatrixJet) -> tuple[MatrixJet, MatrixJet, MatrixJet, MatrixJet]:
    """Split R = P̃ − P into blocks with respect to P.

    :raises PreconditionError: if P or P̃ is not idempotent, or R ∉ L⁻¹
    """
    tol = _tol(p)
    if idempotent_defect(p).level(tol=tol) < p.N:
        raise PreconditionError("P is not idempotent")
    if idempotent_defect(ptilde).level(tol=tol) < ptilde.N:
        raise PreconditionError("P̃ is not idempotent")
    r = ptilde - p
    if r.level(tol=tol) < 1:
        raise PreconditionError("P̃ − P has a nonzero constant term")
    q = MatrixJet.identity(p.field, p.k, p.N) - p
    return p * r * p, p * r * q, q * r * p, q * r * q


def catalan(n: int) -> int:
    return int(sympy_catalan(n))


def expansion_coefficients(ell: int) -> list[int]:
    """c_1, ..., c_ell of the solution x(y) = Σ c_k y^k of x² + x + y = 0,
    x(0) = 0. These are c_k = −Catalan(k−1): −1, −1, −2, −5, −14, ..."""
    if ell < 1:
        raise StructuralError(f"Need at least one coefficient, got ell={ell}")
    return [-catalan(k - 1) for k in range(1, ell + 1)]


def series_residual(coeffs: list[int]) -> list[int]:
    """Coefficients of y, ..., y^ell in x² + x + y for x = Σ c_k y^k.

    All of them vanish for the coefficients of expansion_coefficients(ell).
    """
    ell = len(coeffs)
    x = SERIES.from_dict({(k,): c for k, c in enumerate(coeffs, start=1)})
    residual = rs_mul(x, x, Y, ell + 1) + x + Y
    return [int(residual.coeff(Y**n)) for n in range(1, ell + 1)]


def _series(coeffs: list[int], y: MatrixJet) -> MatrixJet:
    out = MatrixJet.zero(y.field, y.k, y.N)
    power = MatrixJet.identity(y.field, y.k, y.N)
    for c in coeffs:
        power = power * y
        out = out + power.scale(c)
    return out


@dataclass
class ExpansionCheck:
    """Levels of A − Σ_{k≤ℓ} c_k(BC)^k and −D − Σ_{k≤ℓ} c_k(CB)^k."""

    ell: int
    a_level: int
    d_level: int
    required: int

    @property
    def ok(self) -> bool:
        return self.a_level >= self.required and self.d_level >= self.required


@dataclass
class ProjectionTraceReport:
    j: int
    tau_p: Scalar
    tau_ptilde: Scalar
    difference: Scalar
    # max |entry| of A² + A + BC and D² − D + CB
    identity_a: float
    identity_d: float
    identities_hold: bool
    commutator_residual_level: int
    n_levels: int
    exact: bool
    expansion: list[ExpansionCheck] = field(default_factory=list)

    @property
    def trace_agrees(self) -> bool:
        if self.exact:
            return self.difference == 0
        return abs(complex(self.difference)) <= wreslab.config.scalar_tol

    @property
    def ok(self) -> bool:
        return (
            self.trace_agrees
            and self.identities_hold
            and self.commutator_residual_level == self.n_levels
            and all(e.ok for e in self.expansion)
        )

    def as_dict(self, encode: Any) -> dict[str, Any]:
        return {
            "j": self.j,
            "tau_p": encode(self.tau_p),
            "tau_ptilde": encode(self.tau_ptilde),
            "difference": encode(self.difference),
            "identity_a": self.identity_a,
            "identity_d": self.identity_d,
            "identities_hold": self.identities_hold,
            "commutator_residual_level": self.commutator_residual_level,
            "expansion": [
                {"ell": e.ell, "a_level": e.a_level, "d_level": e.d_level, "required": e.required}
                for e in self.expansion
            ],
            "ok": self.ok,
        }


def commutator_representation(b: MatrixJet, c: MatrixJet) -> MatrixJet:
    """Σ c_k [B, (CB)^{k−1} C] with enough terms to be exact in depth N."""
    terms = max(1, b.N // 2)
    cb = c * b
    out = MatrixJet.zero(b.field, b.k, b.N)
    power = MatrixJet.identity(b.field, b.k, b.N)
    for coeff in expansion_coefficients(terms):
        out = out + b.commutator(power * c).scale(coeff)
        power = power * cb
    return out


def verify_projection_trace_invariance(
    p: MatrixJet, ptilde: MatrixJet, spec: ResidueTraceSpec
) -> ProjectionTraceReport:
    """Check τ_j(P) = τ_j(P̃) together with the identities behind it."""
    a, b, c, d = abcd_decompose(p, ptilde)
    tol = _tol(p)
    bc, cb = b * c, c * b
    res_a = a * a + a + bc
    res_d = d * d - d + cb
    identities_hold = res_a.level(tol=tol) == p.N and res_d.level(tol=tol) == p.N

    commutator_level = (a + d - commutator_representation(b, c)).level(tol=tol)

    expansion = []
    for ell in range(1, p.N - 1):
        coeffs = expansion_coefficients(ell)
        expansion.append(
            ExpansionCheck(
                ell,
                (a - _series(coeffs, bc)).level(tol=tol),
                (-d - _series(coeffs, cb)).level(tol=tol),
                2 + ell,
            )
        )

    tau_p = residue_trace(p, spec)
    tau_ptilde = residue_trace(ptilde, spec)
    report = ProjectionTraceReport(
        j=spec.j,
        tau_p=tau_p,
        tau_ptilde=tau_ptilde,
        difference=tau_ptilde - tau_p,
        identity_a=res_a.max_abs(),
        identity_d=res_d.max_abs(),
        identities_hold=identities_hold,
        commutator_residual_level=commutator_level,
        n_levels=p.N,
        exact=p.field.exact,
        expansion=expansion,
    )
    logging.verbose(f"τ_{spec.j}: P={tau_p}, P̃={tau_ptilde}, identities {'hold' if identities_hold else 'FAIL'}")
    return report
