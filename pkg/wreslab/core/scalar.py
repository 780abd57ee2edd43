# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
"""Scalar fields: exact Gaussian rationals and binary64 complex numbers.

Every matrix in wreslab is a numpy array over one of two fields. In exact mode
the array has dtype=object and holds GaussianRational entries, so numpy's
matmul, transpose and conjugate run on exact arithmetic. In f64 mode the array
is complex128.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Any, Union

import numpy as np

from wreslab.helpers.exceptions import SchemaError, StructuralError

Rationalish = Union[int, Fraction, str]


class GaussianRational:
    """Exact element re + im*i of Q(i)."""

    __slots__ = ("re", "im")

    re: Fraction
    im: Fraction

    def __init__(self, re: Rationalish = 0, im: Rationalish = 0) -> None:
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, key: str, value: Any) -> None:
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _coerce(other: object) -> GaussianRational | None:
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        return None

    def __repr__(self) -> str:
        return f"GaussianRational('{self.re}', '{self.im}')"

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            if isinstance(other, complex):
                return complex(self) == other
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __neg__(self) -> GaussianRational:
        return GaussianRational(-self.re, -self.im)

    def __pos__(self) -> GaussianRational:
        return self

    def __add__(self, other: object) -> GaussianRational:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: object) -> GaussianRational:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: object) -> GaussianRational:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other: object) -> GaussianRational:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> GaussianRational:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if not n:
            raise ZeroDivisionError("GaussianRational division by zero")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n, (self.im * o.re - self.re * o.im) / n
        )

    def __rtruediv__(self, other: object) -> GaussianRational:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, exponent: int) -> GaussianRational:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return GaussianRational(1) / (self**-exponent)
        result = GaussianRational(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """Squared modulus re² + im², exact."""
        return self.re * self.re + self.im * self.im

    def __reduce__(self) -> tuple[Any, ...]:
        return (GaussianRational, (self.re, self.im))


Scalar = Union[GaussianRational, complex]


class Mode(enum.Enum):
    """Arithmetic mode of a computation."""

    EXACT = "exact"
    F64 = "f64"

    def __str__(self) -> str:
        return self.value

    @staticmethod
    def choices() -> list[str]:
        return [e.value for e in Mode]


class Field:
    """One scalar field together with the numpy helpers wreslab needs for it.

    :param mode: Mode.EXACT (Gaussian rationals) or Mode.F64 (complex128)
    :param tol: absolute tolerance of one float operation, unused in exact mode
    """

    def __init__(self, mode: Mode, tol: float = 1e-12) -> None:
        self.mode = mode
        self.tol = tol
        self.exact = mode == Mode.EXACT
        self.dtype: Any = object if self.exact else np.complex128
        self.zero: Scalar = self.scalar(0)
        self.one: Scalar = self.scalar(1)
        self.i: Scalar = GaussianRational(0, 1) if self.exact else 1j

    def __repr__(self) -> str:
        return f"Field({self.mode})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and other.mode == self.mode

    def __hash__(self) -> int:
        return hash(self.mode)

    def __reduce__(self) -> tuple[Any, ...]:
        return (Field, (self.mode, self.tol))

    def scalar(self, value: Any) -> Scalar:
        """Convert value into this field. Floats never enter the exact field."""
        if self.exact:
            if isinstance(value, GaussianRational):
                return value
            if isinstance(value, (int, Fraction, str)):
                return GaussianRational(value)
            if isinstance(value, np.integer):
                return GaussianRational(int(value))
            raise TypeError(f"Refusing to convert {value!r} ({type(value)}) to an exact scalar")
        return complex(value)

    def rational(self, numerator: int, denominator: int = 1) -> Scalar:
        if self.exact:
            return GaussianRational(Fraction(numerator, denominator))
        return complex(numerator / denominator)

    def matrix(self, rows: Any) -> np.ndarray:
        if self.exact:
            return np.array([[self.scalar(x) for x in row] for row in rows], dtype=object)
        return np.array(rows, dtype=np.complex128)

    def zeros(self, rows: int, cols: int | None = None) -> np.ndarray:
        return np.full((rows, rows if cols is None else cols), self.zero, dtype=self.dtype)

    def eye(self, k: int) -> np.ndarray:
        out = self.zeros(k)
        for i in range(k):
            out[i, i] = self.one
        return out

    def cast(self, m: np.ndarray) -> np.ndarray:
        """Convert a matrix from any field into this one."""
        if self.exact:
            return self.matrix(m)
        return self.to_complex(m)

    def to_complex(self, m: np.ndarray) -> np.ndarray:
        """complex128 copy of a matrix, for grid evaluation and reports."""
        if m.dtype == object:
            return np.array([[complex(x) for x in row] for row in m], dtype=np.complex128)
        return np.asarray(m, dtype=np.complex128)

    def is_zero(self, x: Scalar, tol: float | None = None) -> bool:
        if self.exact:
            return x == 0
        return abs(x) <= (self.tol if tol is None else tol)

    def is_zero_matrix(self, m: np.ndarray, tol: float | None = None) -> bool:
        if self.exact:
            return all(x == 0 for x in m.flat)
        if m.size == 0:
            return True
        return bool(np.max(np.abs(m)) <= (self.tol if tol is None else tol))

    def max_abs(self, m: np.ndarray) -> float:
        """Largest entry modulus as a float, for reports."""
        if m.size == 0:
            return 0.0
        return max(abs(complex(x)) for x in m.flat)

    def adjoint(self, m: np.ndarray) -> np.ndarray:
        return np.conjugate(m).T

    def det(self, m: np.ndarray) -> Scalar:
        if not self.exact:
            return complex(np.linalg.det(m))
        # deferred, wreslab.core.exact builds on this module
        from wreslab.core import exact

        return exact.det(m)

    def inv(self, m: np.ndarray) -> np.ndarray:
        """Matrix inverse, over sympy's ℚ(i) in exact mode.

        :raises StructuralError: if m is singular
        """
        n = m.shape[0]
        if m.shape != (n, n):
            raise StructuralError(f"Can not invert a {m.shape} matrix")
        if not self.exact:
            if abs(np.linalg.det(m)) <= self.tol:
                raise StructuralError("Matrix is numerically singular")
            return np.linalg.inv(m)
        from wreslab.core import exact

        return exact.inv(m)

    def encode(self, x: Scalar) -> dict[str, Any]:
        """JSON form: "p/q" strings in exact mode, shortest round-trip floats in f64."""
        if self.exact:
            assert isinstance(x, GaussianRational)
            return {"re": str(x.re), "im": str(x.im)}
        c = complex(x)
        return {"re": c.real, "im": c.imag}

    def decode(self, obj: Any, pointer: str = "") -> Scalar:
        if isinstance(obj, dict):
            if set(obj) - {"re", "im"}:
                raise SchemaError(pointer, f"unexpected keys {sorted(set(obj) - {'re', 'im'})}")
            re, im = obj.get("re", 0), obj.get("im", 0)
        elif isinstance(obj, list) and len(obj) == 2:
            re, im = obj
        else:
            re, im = obj, 0
        for part in (re, im):
            if isinstance(part, bool) or not isinstance(part, (int, float, str)):
                raise SchemaError(pointer, f"not a scalar: {obj!r}")
        if self.exact:
            if isinstance(re, float) or isinstance(im, float):
                raise SchemaError(pointer, "float value in an exact-mode document")
            try:
                return GaussianRational(Fraction(re), Fraction(im))
            except (ValueError, ZeroDivisionError) as e:
                raise SchemaError(pointer, f"invalid rational: {e}")
        try:
            return complex(float(Fraction(re)) if isinstance(re, str) else float(re),
                           float(Fraction(im)) if isinstance(im, str) else float(im))
        except (ValueError, ZeroDivisionError) as e:
            raise SchemaError(pointer, f"invalid number: {e}")


EXACT = Field(Mode.EXACT)
F64 = Field(Mode.F64)


def field_for(mode: Mode | str) -> Field:
    match Mode(mode) if isinstance(mode, str) else mode:
        case Mode.EXACT:
            return EXACT
        case Mode.F64:
            return F64
    raise ValueError(f"Invalid mode: {mode}")
