# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
"""Φ_αβ(x, y)(A) = λ_αβ(x, y)·φ_αβ(x)·A·φ_αβ(y)⁻¹"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

import wreslab.config
from wreslab.helpers import logging
from wreslab.helpers.exceptions import PreconditionError, StructureError

from .inner import align_phase, extract_inner
from .nerve import Pair, Point, TransitionSample, apply_map

LambdaSamples = dict[tuple[Point, Point], complex]
PhiSamples = dict[Point, np.ndarray]


@dataclass
class Decomposition:
    lambdas: dict[Pair, LambdaSamples]
    phis: dict[Pair, PhiSamples]
    # max |Φ − λ·(A ↦ φ(x)Aφ(y)⁻¹)| over all samples
    reconstruction_error: float


def path_order(points: list[Point]) -> list[Point]:
    """Numeric points in increasing order, others as sampled."""
    if all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in points):
        return sorted(points)
    return points


def reconstruct(lam: complex, phi_x: np.ndarray, phi_y: np.ndarray) -> np.ndarray:
    return lam * np.kron(phi_x, np.linalg.inv(phi_y).T)


def decompose_transition(s: TransitionSample) -> Decomposition:
    """Split every sampled transition map into (λ, φ).

    φ(x) is the inner part of the diagonal map Φ(x, x), and λ(x, y) the
    scalar φ(x)⁻¹·Φ(x, y)(I)·φ(y). The frame is in canonical phase at the
    first point of each overlap and continued from point to point along
    `path_order`, so that it is continuous wherever the samples are dense.

    :raises PreconditionError: if a point lacks its diagonal sample
    :raises StructureError: if φ(x)⁻¹·Φ(x, y)(I)·φ(y) is not scalar
    """
    identity = np.eye(s.k, dtype=np.complex128)
    lambdas: dict[Pair, LambdaSamples] = {}
    phis: dict[Pair, PhiSamples] = {}
    error = 0.0
    for pair, samples in s.maps.items():
        phi: PhiSamples = {}
        previous = None
        for x in path_order([x for x, y in samples if x == y]):
            u = extract_inner(samples[(x, x)])
            phi[x] = u if previous is None else align_phase(u, phi[previous])
            previous = x
        lam: LambdaSamples = {}
        for (x, y), t in samples.items():
            missing = [p for p in (x, y) if p not in phi]
            if missing:
                raise PreconditionError(f"Overlap {pair} has no diagonal sample at {missing[0]!r}")
            m = np.linalg.inv(phi[x]) @ apply_map(t, identity) @ phi[y]
            value = complex(np.trace(m)) / s.k
            off = float(np.max(np.abs(m - value * identity)))
            if off > wreslab.config.structural_tol:
                raise StructureError(
                    f"Overlap {pair} at {(x, y)!r}: image of the identity is not scalar (off by {off:.3g})"
                )
            lam[(x, y)] = value
            error = max(error, float(np.max(np.abs(t - reconstruct(value, phi[x], phi[y])))))
        lambdas[pair] = lam
        phis[pair] = phi
        logging.verbose(f"decompose_transition: {pair}: {len(phi)} frames, {len(lam)} scalars")
    return Decomposition(lambdas, phis, error)


@dataclass
class LambdaReport:
    """Largest violations of λ(x,x) = 1, λ(x,y)λ(y,z) = λ(x,z) and
    λ(x,y) = conj λ(y,x)."""

    diagonal: float = 0.0
    multiplicative: float = 0.0
    conjugate_symmetry: float = 0.0
    checked: dict[str, int] = field(default_factory=lambda: {"diagonal": 0, "multiplicative": 0, "conjugate_symmetry": 0})

    def merge(self, other: LambdaReport) -> LambdaReport:
        return LambdaReport(
            max(self.diagonal, other.diagonal),
            max(self.multiplicative, other.multiplicative),
            max(self.conjugate_symmetry, other.conjugate_symmetry),
            {key: self.checked[key] + other.checked[key] for key in self.checked},
        )

    def ok(self, tol: float | None = None) -> bool:
        tol = wreslab.config.scalar_tol if tol is None else tol
        return max(self.diagonal, self.multiplicative, self.conjugate_symmetry) <= tol

    def as_dict(self) -> dict[str, Any]:
        return {
            "diagonal": self.diagonal,
            "multiplicative": self.multiplicative,
            "conjugate_symmetry": self.conjugate_symmetry,
            "checked": dict(self.checked),
        }


def verify_lambda(lam: LambdaSamples) -> LambdaReport:
    """Check the relations of the scalar part of one overlap's transition data."""
    report = LambdaReport()
    for (x, y), value in lam.items():
        if x == y:
            report.diagonal = max(report.diagonal, abs(value - 1))
            report.checked["diagonal"] += 1
        if (y, x) in lam:
            report.conjugate_symmetry = max(report.conjugate_symmetry, abs(value - lam[(y, x)].conjugate()))
            report.checked["conjugate_symmetry"] += 1
    for (x, y), first in lam.items():
        for (y2, z), second in lam.items():
            if y2 != y or (x, z) not in lam:
                continue
            report.multiplicative = max(report.multiplicative, abs(first * second - lam[(x, z)]))
            report.checked["multiplicative"] += 1
    return report


def transition_sample(
    k: int,
    frames: dict[Pair, Any],
    scalars: dict[Pair, Any],
    points: dict[Pair, list[tuple[Point, Point]]],
) -> TransitionSample:
    """Assemble transition maps from callables φ_αβ(x) and λ_αβ(x, y)."""
    maps = {}
    for pair, pts in points.items():
        phi, lam = frames[pair], scalars[pair]
        maps[pair] = {(x, y): complex(lam(x, y)) * np.kron(phi(x), np.linalg.inv(phi(y)).T) for x, y in pts}
    return TransitionSample(k, maps)

