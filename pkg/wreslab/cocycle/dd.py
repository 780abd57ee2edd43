# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
"""The ℤ/k Čech 2-cocycle ζ_αβγ·I = φ_αβ φ_βγ φ_γα of the transition frames.

Its class is the torsion Dixmier–Douady class of the underlying Azumaya
bundle. Frames of a reversed overlap are taken as inverses of the stored
ones.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
import math
from typing import Any

import numpy as np

import wreslab.config
from wreslab.helpers import logging
from wreslab.helpers.exceptions import NotAConvolutionBundleError, PreconditionError

from .nerve import Chart, NerveData, Pair, Point, Tetrahedron, TransitionSample, Triple
from .transition import Decomposition, LambdaReport, PhiSamples, decompose_transition, verify_lambda


def frame(phis: dict[Pair, PhiSamples], pair: Pair, x: Point) -> np.ndarray:
    a, b = pair
    try:
        if pair in phis:
            return phis[pair][x]
        return np.linalg.inv(phis[(b, a)][x])
    except KeyError:
        raise PreconditionError(f"No frame of overlap {pair} at {x!r}")


def triple_scalar(phis: dict[Pair, PhiSamples], triple: Triple, x: Point, k: int) -> complex:
    """ζ with φ_αβ(x)φ_βγ(x)φ_γα(x) = ζ·I.

    :raises NotAConvolutionBundleError: if the product is not scalar
    """
    a, b, c = triple
    m = frame(phis, (a, b), x) @ frame(phis, (b, c), x) @ frame(phis, (c, a), x)
    zeta = complex(np.trace(m)) / k
    off = float(np.max(np.abs(m - zeta * np.eye(k))))
    if off > wreslab.config.structural_tol:
        raise NotAConvolutionBundleError(f"Frames of {triple} at {x!r} multiply to a non-scalar (off by {off:.3g})")
    return zeta


def root_index(zeta: complex, k: int) -> int:
    """m with ζ ≈ e^{2πim/k}, 0 ≤ m < k."""
    return round(cmath.phase(zeta) * k / (2 * math.pi)) % k


@dataclass
class CocycleReport:
    k: int
    zeta: dict[Triple, complex] = field(default_factory=dict)
    # max |ζ(x) − ζ(x₀)| over the sample points of each triple
    deviation: dict[Triple, float] = field(default_factory=dict)
    root_violation: float = 0.0
    coboundary: dict[Tetrahedron, complex] = field(default_factory=dict)
    closedness_violation: float = 0.0

    def ok(self, tol: float | None = None) -> bool:
        tol = wreslab.config.scalar_tol if tol is None else tol
        return self.root_violation <= tol and self.closedness_violation <= tol

    def as_dict(self) -> dict[str, Any]:
        def enc(z: complex) -> dict[str, float]:
            return {"re": z.real, "im": z.imag}

        return {
            "k": self.k,
            "triples": [
                {
                    "charts": list(t),
                    "zeta": enc(z),
                    "root": root_index(z, self.k),
                    "deviation": self.deviation[t],
                }
                for t, z in self.zeta.items()
            ],
            "root_violation": self.root_violation,
            "tetrahedra": [{"charts": list(t), "delta_zeta": enc(z)} for t, z in self.coboundary.items()],
            "closedness_violation": self.closedness_violation,
            "ok": self.ok(),
        }


def _face_scalar(
    phis: dict[Pair, PhiSamples], face: Triple, points: list[Point], k: int, known: dict[Triple, complex]
) -> complex:
    if face in known:
        return known[face]
    return triple_scalar(phis, face, points[0], k)


def dd_cocycle(nerve: NerveData, phis: dict[Pair, PhiSamples], k: int) -> CocycleReport:
    """ζ on every triple of the nerve, and δζ on every tetrahedron.

    δζ_αβγδ = ζ_βγδ ζ_αγδ⁻¹ ζ_αβδ ζ_αβγ⁻¹ must be 1.

    :raises NotAConvolutionBundleError: if some triple product is not a
        constant scalar across the triple's sample points
    """
    report = CocycleReport(k)
    for triple, points in nerve.triples.items():
        if not points:
            raise PreconditionError(f"Triple {triple} has no sample points")
        values = [triple_scalar(phis, triple, x, k) for x in points]
        deviation = max(abs(v - values[0]) for v in values)
        if deviation > wreslab.config.structural_tol:
            raise NotAConvolutionBundleError(f"Triple product of {triple} varies by {deviation:.3g}")
        zeta = values[0]
        report.zeta[triple] = zeta
        report.deviation[triple] = deviation
        report.root_violation = max(report.root_violation, abs(zeta**k - 1))
        logging.verbose(f"dd_cocycle: ζ{triple} = e^(2πi·{root_index(zeta, k)}/{k})")

    for tet, points in nerve.tetrahedra.items():
        if not points:
            raise PreconditionError(f"Tetrahedron {tet} has no sample points")
        a, b, c, d = tet
        faces: list[tuple[Chart, Chart, Chart]] = [(b, c, d), (a, c, d), (a, b, d), (a, b, c)]
        z = [_face_scalar(phis, f, points, k, report.zeta) for f in faces]
        delta = z[0] / z[1] * z[2] / z[3]
        report.coboundary[tet] = delta
        report.closedness_violation = max(report.closedness_violation, abs(delta - 1))
    return report


@dataclass
class NerveReport:
    """Everything that is checked for a sampled nerve."""

    decomposition: Decomposition
    lam: LambdaReport
    cocycle: CocycleReport

    def ok(self, tol: float | None = None) -> bool:
        tol = wreslab.config.scalar_tol if tol is None else tol
        return self.decomposition.reconstruction_error <= tol and self.lam.ok(tol) and self.cocycle.ok(tol)

    def as_dict(self) -> dict[str, Any]:
        return {
            "reconstruction_error": self.decomposition.reconstruction_error,
            "lambda": self.lam.as_dict(),
            "cocycle": self.cocycle.as_dict(),
            "ok": self.ok(),
        }


def analyze_nerve(nerve: NerveData, sample: TransitionSample) -> NerveReport:
    """Decompose all transition maps, check the λ relations and compute ζ."""
    decomposition = decompose_transition(sample)
    lam = LambdaReport()
    for samples in decomposition.lambdas.values():
        lam = lam.merge(verify_lambda(samples))
    cocycle = dd_cocycle(nerve, decomposition.phis, sample.k)
    return NerveReport(decomposition, lam, cocycle)
