# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
"""Sampled transition data of a convolution bundle over a finite cover.

A linear map T on Mat(k) is stored as the k²×k² matrix acting on row-major
vectorizations, vec(A)[i·k + j] = A[i, j]. Conjugation A ↦ uAu⁻¹ is then
kron(u, (u⁻¹)ᵀ).
"""

from __future__ import annotations

from collections.abc import Hashable
from dataclasses import dataclass, field

import numpy as np

from wreslab.helpers.exceptions import StructuralError

Chart = Hashable
Point = Hashable
Pair = tuple[Chart, Chart]
Triple = tuple[Chart, Chart, Chart]
Tetrahedron = tuple[Chart, Chart, Chart, Chart]


def apply_map(t: np.ndarray, a: np.ndarray) -> np.ndarray:
    k = a.shape[0]
    return (t @ a.reshape(k * k)).reshape(k, k)


def conjugation_map(u: np.ndarray) -> np.ndarray:
    """k²×k² matrix of A ↦ uAu⁻¹"""
    return np.kron(u, np.linalg.inv(u).T)


def matrix_unit(k: int, i: int, j: int) -> np.ndarray:
    e = np.zeros((k, k), dtype=np.complex128)
    e[i, j] = 1
    return e


@dataclass
class NerveData:
    """Charts and the sample points of their overlaps, triples and tetrahedra.

    overlaps maps an ordered pair to its sample point pairs (x, y);
    triples and tetrahedra map ordered tuples to sample points x.
    """

    charts: list[Chart]
    overlaps: dict[Pair, list[tuple[Point, Point]]]
    triples: dict[Triple, list[Point]] = field(default_factory=dict)
    tetrahedra: dict[Tetrahedron, list[Point]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        known = set(self.charts)
        for pair in self.overlaps:
            if not set(pair) <= known:
                raise StructuralError(f"Overlap {pair} uses an unknown chart")
        for triple in self.triples:
            a, b, c = triple
            for edge in ((a, b), (b, c), (a, c)):
                if not self.has_overlap(edge):
                    raise StructuralError(f"Edge {edge} of triple {triple} is not an overlap")
        for tet in self.tetrahedra:
            if not set(tet) <= known:
                raise StructuralError(f"Tetrahedron {tet} uses an unknown chart")

    def has_overlap(self, pair: Pair) -> bool:
        return pair in self.overlaps or (pair[1], pair[0]) in self.overlaps


@dataclass
class TransitionSample:
    """Transition maps Φ_αβ(x, y) on Mat(k), per overlap and point pair."""

    k: int
    maps: dict[Pair, dict[tuple[Point, Point], np.ndarray]]

    def __post_init__(self) -> None:
        n = self.k * self.k
        for pair, samples in self.maps.items():
            for points, t in samples.items():
                if t.shape != (n, n):
                    raise StructuralError(
                        f"Map of {pair} at {points} has shape {t.shape}, expected {(n, n)}"
                    )
