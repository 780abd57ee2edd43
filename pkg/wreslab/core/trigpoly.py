# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
"""Matrix-valued trigonometric polynomials on the circle."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
import math
from typing import Any

import numpy as np

from wreslab.core import exact
from wreslab.core.context import fourier_cap
from wreslab.core.scalar import Field, Scalar
from wreslab.helpers import logging
from wreslab.helpers.exceptions import StructuralError

# Float coefficients below this are treated as cancellation noise and dropped
DROP_TOL = 1e-13


class TrigPoly:
    """A k×k matrix function Σ_j c_j e^{ijx}, stored sparsely as {j: c_j}.

    Zero coefficients are never stored, so J (the largest |j|) is the true
    Fourier support. Products grow J additively; whenever a product would
    exceed the Fourier cap the high modes are dropped and the result (and
    everything computed from it) carries truncated=True.
    """

    __slots__ = ("field", "k", "coeffs", "truncated")

    def __init__(
        self,
        field: Field,
        k: int,
        coeffs: Mapping[int, np.ndarray] | None = None,
        truncated: bool = False,
    ) -> None:
        if k < 1:
            raise StructuralError(f"Matrix dimension must be positive, got {k}")
        self.field = field
        self.k = k
        self.truncated = truncated
        self.coeffs: dict[int, np.ndarray] = {}
        for j, c in (coeffs or {}).items():
            if c.shape != (k, k):
                raise StructuralError(f"Coefficient {j} has shape {c.shape}, expected {(k, k)}")
            if field.exact:
                if field.is_zero_matrix(c):
                    continue
            elif not c.size or np.max(np.abs(c)) <= DROP_TOL:
                continue
            self.coeffs[int(j)] = c

    # Constructors

    @classmethod
    def zero(cls, field: Field, k: int) -> TrigPoly:
        return cls(field, k)

    @classmethod
    def constant(cls, field: Field, matrix: np.ndarray) -> TrigPoly:
        return cls(field, matrix.shape[0], {0: matrix})

    @classmethod
    def identity(cls, field: Field, k: int) -> TrigPoly:
        return cls(field, k, {0: field.eye(k)})

    @classmethod
    def scalar(cls, field: Field, k: int, values: Mapping[int, Any]) -> TrigPoly:
        """Scalar function Σ values[j] e^{ijx} times the k×k identity."""
        eye = field.eye(k)
        return cls(field, k, {j: field.scalar(v) * eye for j, v in values.items()})

    @classmethod
    def monomial(cls, field: Field, j: int, matrix: np.ndarray) -> TrigPoly:
        return cls(field, matrix.shape[0], {j: matrix})

    @classmethod
    def cos(cls, field: Field, n: int, matrix: np.ndarray) -> TrigPoly:
        """matrix·cos(nx)"""
        half = field.rational(1, 2)
        return cls(field, matrix.shape[0], {n: half * matrix}) + cls(
            field, matrix.shape[0], {-n: half * matrix}
        )

    @classmethod
    def sin(cls, field: Field, n: int, matrix: np.ndarray) -> TrigPoly:
        """matrix·sin(nx) = matrix·(e^{inx} − e^{−inx})/2i"""
        c = field.i * field.rational(1, 2)
        return cls(field, matrix.shape[0], {n: -c * matrix}) + cls(
            field, matrix.shape[0], {-n: c * matrix}
        )

    @classmethod
    def from_entries(cls, field: Field, entries: list[list[TrigPoly]]) -> TrigPoly:
        """Assemble a k×k TrigPoly from a k×k grid of scalar (1×1) TrigPolys."""
        k = len(entries)
        modes = sorted({j for row in entries for e in row for j in e.coeffs})
        coeffs = {}
        for j in modes:
            m = field.zeros(k)
            for r, row in enumerate(entries):
                for c, e in enumerate(row):
                    if j in e.coeffs:
                        m[r, c] = e.coeffs[j][0, 0]
            coeffs[j] = m
        truncated = any(e.truncated for row in entries for e in row)
        return cls(field, k, coeffs, truncated)

    @classmethod
    def fit(cls, field: Field, samples: np.ndarray, J: int | None = None) -> TrigPoly:
        """Fourier fit of grid samples f(2πn/N), n < N, shaped (N, k, k).

        With odd N and J = (N−1)/2 the fit interpolates the samples exactly.
        """
        if field.exact:
            raise StructuralError("Fourier fitting from samples is only available in f64 mode")
        n = samples.shape[0]
        if J is None:
            J = (n - 1) // 2
        if 2 * J + 1 > n:
            raise StructuralError(f"{n} samples can not determine {2 * J + 1} Fourier modes")
        spectrum = np.fft.fft(samples, axis=0) / n
        return cls(field, samples.shape[1], {j: spectrum[j % n] for j in range(-J, J + 1)})

    # Properties

    @property
    def J(self) -> int:
        return max((abs(j) for j in self.coeffs), default=0)

    def coefficient(self, j: int) -> np.ndarray:
        return self.coeffs.get(j, self.field.zeros(self.k))

    def mean(self) -> np.ndarray:
        """Zeroth Fourier coefficient, i.e. (1/2π)∫ f dx."""
        return self.coefficient(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return all(j == 0 for j in self.coeffs)

    def is_scalar(self) -> bool:
        """True when every coefficient is a multiple of the identity."""
        for c in self.coeffs.values():
            off = c - c[0, 0] * self.field.eye(self.k)
            if not self.field.is_zero_matrix(off):
                return False
        return True

    def entry(self, r: int, c: int) -> TrigPoly:
        return TrigPoly(
            self.field,
            1,
            {j: self.field.matrix([[m[r, c]]]) for j, m in self.coeffs.items()},
            self.truncated,
        )

    # Arithmetic

    def _check(self, other: TrigPoly) -> None:
        if other.field != self.field:
            raise StructuralError(f"Field mismatch: {self.field} vs {other.field}")
        if other.k != self.k:
            raise StructuralError(f"Dimension mismatch: {self.k} vs {other.k}")

    def __add__(self, other: TrigPoly) -> TrigPoly:
        if not isinstance(other, TrigPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.coeffs)
        for j, c in other.coeffs.items():
            out[j] = out[j] + c if j in out else c
        return TrigPoly(self.field, self.k, out, self.truncated or other.truncated)

    def __neg__(self) -> TrigPoly:
        return TrigPoly(self.field, self.k, {j: -c for j, c in self.coeffs.items()}, self.truncated)

    def __sub__(self, other: TrigPoly) -> TrigPoly:
        if not isinstance(other, TrigPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, s: Scalar) -> TrigPoly:
        s = self.field.scalar(s)
        return TrigPoly(self.field, self.k, {j: s * c for j, c in self.coeffs.items()}, self.truncated)

    def __mul__(self, other: Any) -> TrigPoly:
        if not isinstance(other, TrigPoly):
            return self.scale(other)
        self._check(other)
        out: dict[int, np.ndarray] = {}
        for j1, c1 in self.coeffs.items():
            for j2, c2 in other.coeffs.items():
                p = c1 @ c2
                j = j1 + j2
                out[j] = out[j] + p if j in out else p
        truncated = self.truncated or other.truncated
        cap = fourier_cap()
        if out and max(abs(j) for j in out) > cap:
            logging.warn_once(f"WARNING: Fourier cap {cap} exceeded, truncating high modes")
            out = {j: c for j, c in out.items() if abs(j) <= cap}
            truncated = True
        return TrigPoly(self.field, self.k, out, truncated)

    def __rmul__(self, other: Any) -> TrigPoly:
        return self.scale(other)

    def __pow__(self, n: int) -> TrigPoly:
        out = TrigPoly.identity(self.field, self.k)
        for _ in range(n):
            out = out * self
        return out

    def matrix_product(self, m: np.ndarray, left: bool = True) -> TrigPoly:
        """Multiply by a constant matrix from the left (or right)."""
        return TrigPoly(
            self.field,
            self.k,
            {j: (m @ c if left else c @ m) for j, c in self.coeffs.items()},
            self.truncated,
        )

    def shift(self, n: int) -> TrigPoly:
        """Multiply by e^{inx}."""
        return TrigPoly(self.field, self.k, {j + n: c for j, c in self.coeffs.items()}, self.truncated)

    def dx(self, power: int = 1) -> TrigPoly:
        """D_x^power with D_x = −i∂_x, so D_x e^{ijx} = j e^{ijx}."""
        if power == 0:
            return self
        return TrigPoly(
            self.field,
            self.k,
            {j: self.field.scalar(j**power) * c for j, c in self.coeffs.items()},
            self.truncated,
        )

    def adjoint(self) -> TrigPoly:
        """Pointwise conjugate transpose: f(x)^† = Σ c_j^† e^{−ijx}."""
        return TrigPoly(
            self.field,
            self.k,
            {-j: self.field.adjoint(c) for j, c in self.coeffs.items()},
            self.truncated,
        )

    def transpose(self) -> TrigPoly:
        return TrigPoly(self.field, self.k, {j: c.T for j, c in self.coeffs.items()}, self.truncated)

    def trace(self) -> TrigPoly:
        return TrigPoly(
            self.field,
            1,
            {j: self.field.matrix([[np.trace(c)]]) for j, c in self.coeffs.items()},
            self.truncated,
        )

    def block_sum(self, other: TrigPoly) -> TrigPoly:
        if other.field != self.field:
            raise StructuralError(f"Field mismatch: {self.field} vs {other.field}")
        k = self.k + other.k
        out = {}
        for j in set(self.coeffs) | set(other.coeffs):
            m = self.field.zeros(k)
            m[: self.k, : self.k] = self.coefficient(j)
            m[self.k :, self.k :] = other.coefficient(j)
            out[j] = m
        return TrigPoly(self.field, k, out, self.truncated or other.truncated)

    def cast(self, field: Field) -> TrigPoly:
        return TrigPoly(field, self.k, {j: field.cast(c) for j, c in self.coeffs.items()}, self.truncated)

    # Determinant and inverse

    def det(self) -> TrigPoly:
        """Determinant as a scalar TrigPoly.

        Exact mode works over sympy's ℚ(i)[z]. In f64 mode the determinant
        has degree at most kJ and is interpolated from 2kJ + 1 nodes.
        """
        n = self.k * self.J
        if self.field.exact:
            d = exact.laurent_matrix(self.coeffs, self.k, self.J).det()
            coeffs = exact.laurent_coeffs(d, n)
            return TrigPoly(self.field, 1, {j: self.field.matrix([[c]]) for j, c in coeffs.items()}, self.truncated)
        dets = np.linalg.det(self.on_grid(2 * n + 1))
        return TrigPoly(self.field, 1, TrigPoly.fit(self.field, dets[:, None, None], n).coeffs, self.truncated)

    def adjugate(self) -> TrigPoly:
        """adj(f) with adj(f)·f = det(f)·I, of degree at most (k − 1)J.

        :raises StructuralError: in f64 mode, if f is singular at a node
        """
        if self.k == 1:
            return TrigPoly.identity(self.field, 1)
        n = (self.k - 1) * self.J
        if self.field.exact:
            adj = exact.adjugate(exact.laurent_matrix(self.coeffs, self.k, self.J))
            return TrigPoly(self.field, self.k, exact.matrix_coeffs(adj, n), self.truncated)
        grid = self.on_grid(2 * n + 1)
        dets = np.linalg.det(grid)
        if np.min(np.abs(dets)) <= self.field.tol:
            raise StructuralError("Matrix function is singular on the interpolation grid")
        values = dets[:, None, None] * np.linalg.inv(grid)
        return TrigPoly(self.field, self.k, TrigPoly.fit(self.field, values, n).coeffs, self.truncated)

    def inverse(self, fit_modes: int | None = None) -> TrigPoly:
        """Pointwise matrix inverse.

        Exact whenever the determinant is a monomial c·e^{inx} (these are the
        units of the Laurent polynomial ring). Otherwise f64 mode samples the
        pointwise inverse on a grid and fits it with fit_modes modes.

        :raises StructuralError: if no trigonometric polynomial inverse exists
        """
        d = self.det()
        lead = _monomial(d)
        if lead is not None:
            j, c = lead
            inv_det = TrigPoly(self.field, self.k, {-j: (self.field.one / c) * self.field.eye(self.k)})
            return inv_det * self.adjugate()
        if self.field.exact:
            raise StructuralError(
                "Determinant is not a monomial, the inverse is not a trigonometric polynomial"
            )
        modes = fit_modes if fit_modes is not None else min(fourier_cap(), max(16, 4 * self.J))
        grid = self.on_grid(2 * modes + 1)
        dets = np.linalg.det(grid)
        if np.min(np.abs(dets)) <= self.field.tol:
            raise StructuralError("Matrix function is singular on the sampling grid")
        logging.debug(f"Fitting pointwise inverse with {modes} Fourier modes")
        return TrigPoly.fit(self.field, np.linalg.inv(grid), modes)

    # Evaluation

    def evaluate(self, x: float) -> np.ndarray:
        out = np.zeros((self.k, self.k), dtype=np.complex128)
        for j, c in self.coeffs.items():
            out += np.exp(1j * j * x) * self.field.to_complex(c)
        return out

    def on_grid(self, n: int) -> np.ndarray:
        """Values at x_m = 2πm/n, m < n, shaped (n, k, k), complex128."""
        x = 2 * math.pi * np.arange(n) / n
        out = np.zeros((n, self.k, self.k), dtype=np.complex128)
        for j, c in self.coeffs.items():
            out += np.exp(1j * j * x)[:, None, None] * self.field.to_complex(c)[None]
        return out

    def max_abs(self, n: int = 64) -> float:
        """Max entry modulus over a grid of n points."""
        if not self.coeffs:
            return 0.0
        return float(np.max(np.abs(self.on_grid(n))))

    # Comparison

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TrigPoly):
            return NotImplemented
        if other.field != self.field or other.k != self.k:
            return False
        if set(self.coeffs) != set(other.coeffs):
            return False
        return all(
            self.field.is_zero_matrix(self.coeffs[j] - other.coeffs[j], tol=0.0)
            for j in self.coeffs
        )

    __hash__ = None  # type: ignore[assignment]

    def isclose(self, other: TrigPoly, tol: float) -> bool:
        """Coefficient-wise comparison with an absolute tolerance (exact: equality)."""
        diff = self - other
        if self.field.exact:
            return diff.is_zero()
        return all(np.max(np.abs(self.field.to_complex(c))) <= tol for c in diff.coeffs.values())

    def __repr__(self) -> str:
        terms = ", ".join(f"{j}: {c.tolist()}" for j, c in sorted(self.coeffs.items()))
        flag = ", truncated" if self.truncated else ""
        return f"TrigPoly(k={self.k}, {{{terms}}}{flag})"


def _monomial(d: TrigPoly) -> tuple[int, Scalar] | None:
    """Return (j, c) if the scalar TrigPoly d is c·e^{ijx} up to float noise."""
    if not d.coeffs:
        return None
    j, c = max(d.coeffs.items(), key=lambda item: abs(complex(item[1][0, 0])))
    lead = c[0, 0]
    if d.field.exact:
        return (j, lead) if len(d.coeffs) == 1 else None
    rest = max((abs(complex(m[0, 0])) for i, m in d.coeffs.items() if i != j), default=0.0)
    if rest <= d.field.tol * max(1.0, abs(lead)):
        return (j, lead)
    return None


def product(factors: Iterable[TrigPoly]) -> TrigPoly:
    it = iter(factors)
    out = next(it)
    for f in it:
        out = out * f
    return out
