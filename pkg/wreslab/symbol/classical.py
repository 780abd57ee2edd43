# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
"""Classical (polyhomogeneous) symbols as finite sums of homogeneous components."""

from __future__ import annotations

from collections.abc import Iterable, Mapping

from wreslab.core.scalar import Field, Scalar
from wreslab.core.trigpoly import TrigPoly
from wreslab.helpers.exceptions import PrecisionError, StructuralError
from wreslab.symbol.homogeneous import HomComponent


def lower_floor(*floors: int | None) -> int | None:
    """Highest of several floors, with None standing for "complete" (−∞)."""
    known = [f for f in floors if f is not None]
    return max(known) if known else None


class ClassicalSymbol:
    """a ~ Σ_{floor ≤ d ≤ m} a_d with a_d homogeneous of degree d.

    floor is the lowest degree the symbol is known to. Components below it are
    undetermined, not zero. floor=None marks a complete symbol: every component
    below the stored ones is exactly zero (e.g. ξ or a multiplication operator).

    :param m: order; m is an upper bound for the stored degrees
    :param floor: lowest determined degree, or None when the symbol is complete
    :param components: HomComponents, keyed by degree or as an iterable. Zero
        components are dropped; components below floor are discarded.
    """

    __slots__ = ("field", "k", "m", "floor", "components")

    def __init__(
        self,
        field: Field,
        k: int,
        m: int,
        floor: int | None,
        components: Mapping[int, HomComponent] | Iterable[HomComponent] = (),
    ) -> None:
        if floor is not None and floor > m:
            raise StructuralError(f"Floor {floor} lies above the order {m}")
        self.field = field
        self.k = k
        self.m = m
        self.floor = floor
        self.components: dict[int, HomComponent] = {}
        items = components.values() if isinstance(components, Mapping) else components
        for c in items:
            if c.field != field or c.k != k:
                raise StructuralError(f"Component of degree {c.d} has the wrong shape or field")
            if c.d > m:
                if c.is_zero():
                    continue
                raise StructuralError(f"Component of degree {c.d} exceeds the order {m}")
            if floor is not None and c.d < floor:
                continue
            if c.d in self.components:
                c = self.components[c.d] + c
            self.components[c.d] = c
        self.components = {d: c for d, c in self.components.items() if not c.is_zero()}

    # Constructors

    @classmethod
    def from_components(
        cls, components: Iterable[HomComponent], floor: int | None = None, m: int | None = None
    ) -> ClassicalSymbol:
        comps = list(components)
        if not comps:
            raise StructuralError("A symbol needs at least one component to infer its shape")
        order = m if m is not None else max(c.d for c in comps)
        return cls(comps[0].field, comps[0].k, order, floor, comps)

    @classmethod
    def zero(cls, field: Field, k: int, m: int = 0, floor: int | None = None) -> ClassicalSymbol:
        return cls(field, k, m, floor)

    @classmethod
    def multiplication(cls, f: TrigPoly) -> ClassicalSymbol:
        """Symbol of the multiplication operator u ↦ f·u (complete, order 0)."""
        return cls(f.field, f.k, 0, None, [HomComponent.xi_power(f.field, f.k, 0, f)])

    @classmethod
    def identity(cls, field: Field, k: int) -> ClassicalSymbol:
        return cls.multiplication(TrigPoly.identity(field, k))

    @classmethod
    def xi(cls, field: Field, k: int, power: int = 1) -> ClassicalSymbol:
        """ξ^power·I, the symbol of D_x^power (complete)."""
        return cls(field, k, power, None, [HomComponent.xi_power(field, k, power)])

    @classmethod
    def abs_xi(cls, field: Field, k: int, power: int = 1, floor: int | None = None) -> ClassicalSymbol:
        """|ξ|^power·I. For power ≥ 0 this is |D|^power away from the zero mode."""
        return cls(field, k, power, floor, [HomComponent.abs_xi_power(field, k, power)])

    # Queries

    def component(self, d: int) -> HomComponent:
        """The degree-d component; zero when absent.

        :raises PrecisionError: if d lies below the floor
        """
        if self.floor is not None and d < self.floor:
            raise PrecisionError(
                f"Degree {d} lies below the floor {self.floor} of this symbol", self.floor
            )
        return self.components.get(d, HomComponent.zero(self.field, self.k, d))

    def principal(self) -> HomComponent:
        return self.component(self.m)

    @property
    def degrees(self) -> list[int]:
        return sorted(self.components, reverse=True)

    @property
    def truncated(self) -> bool:
        return any(c.truncated for c in self.components.values())

    def is_complete(self) -> bool:
        return self.floor is None

    def is_polynomial(self) -> bool:
        """True for differential operators: complete and polynomial in ξ."""
        return self.floor is None and all(c.is_polynomial() for c in self.components.values())

    def is_xi_polynomial(self) -> bool:
        """All degrees ≥ 0, so repeated ξ-derivatives eventually vanish."""
        return all(d >= 0 for d in self.components)

    def is_x_independent(self) -> bool:
        return all(c.is_x_independent() for c in self.components.values())

    def lowest_degree(self) -> int:
        """Lowest degree that is known: floor, or the lowest stored degree."""
        if self.floor is not None:
            return self.floor
        return min(self.components, default=self.m)

    # Arithmetic

    def _check(self, other: ClassicalSymbol) -> None:
        if other.field != self.field:
            raise StructuralError(f"Field mismatch: {self.field} vs {other.field}")
        if other.k != self.k:
            raise StructuralError(f"Dimension mismatch: {self.k} vs {other.k}")

    def _combine(self, other: ClassicalSymbol, sign: int) -> ClassicalSymbol:
        self._check(other)
        m = max(self.m, other.m)
        floor = lower_floor(self.floor, other.floor)
        if floor is not None:
            floor = min(floor, m)
        comps = list(self.components.values())
        comps += [c if sign > 0 else -c for c in other.components.values()]
        return ClassicalSymbol(self.field, self.k, m, floor, comps)

    def __add__(self, other: ClassicalSymbol) -> ClassicalSymbol:
        return self._combine(other, 1)

    def __sub__(self, other: ClassicalSymbol) -> ClassicalSymbol:
        return self._combine(other, -1)

    def __neg__(self) -> ClassicalSymbol:
        return ClassicalSymbol(
            self.field, self.k, self.m, self.floor, [-c for c in self.components.values()]
        )

    def scale(self, s: Scalar) -> ClassicalSymbol:
        return ClassicalSymbol(
            self.field, self.k, self.m, self.floor, [c.scale(s) for c in self.components.values()]
        )

    def left_mul(self, f: TrigPoly) -> ClassicalSymbol:
        """Pointwise product f(x)·a(x, ξ) (equal to the composition f # a)."""
        return ClassicalSymbol(
            self.field, self.k, self.m, self.floor, [c.left_mul(f) for c in self.components.values()]
        )

    def with_floor(self, floor: int) -> ClassicalSymbol:
        """Forget every component below floor.

        :raises PrecisionError: if floor lies below the current floor
        """
        if self.floor is not None and floor < self.floor:
            raise PrecisionError(
                f"Can not extend a symbol known to degree {self.floor} down to {floor}", self.floor
            )
        return ClassicalSymbol(
            self.field, self.k, self.m, min(floor, self.m), self.components.values()
        )

    def with_order(self, m: int) -> ClassicalSymbol:
        """Same symbol, declared with a (possibly higher) order m."""
        return ClassicalSymbol(self.field, self.k, m, self.floor, self.components.values())

    def trace(self) -> ClassicalSymbol:
        return ClassicalSymbol(
            self.field, 1, self.m, self.floor, [c.trace() for c in self.components.values()]
        )

    def cast(self, field: Field) -> ClassicalSymbol:
        return ClassicalSymbol(
            field, self.k, self.m, self.floor, [c.cast(field) for c in self.components.values()]
        )

    # Comparison

    def agrees_with(
        self, other: ClassicalSymbol, floor: int | None = None, tol: float | None = None
    ) -> bool:
        """Compare both symbols degree by degree down to floor.

        floor defaults to the highest floor of the two. Exact symbols compare
        by equality, f64 symbols within tol.
        """
        self._check(other)
        if floor is None:
            floor = lower_floor(self.floor, other.floor)
        for s in (self, other):
            if floor is not None and s.floor is not None and floor < s.floor:
                raise PrecisionError(f"Can not compare below the floor {s.floor}", s.floor)
        degrees = set(self.components) | set(other.components)
        tol = self.field.tol if tol is None else tol
        for d in degrees:
            if floor is not None and d < floor:
                continue
            a = self.components.get(d, HomComponent.zero(self.field, self.k, d))
            b = other.components.get(d, HomComponent.zero(self.field, self.k, d))
            if not a.isclose(b, tol):
                return False
        return True

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClassicalSymbol):
            return NotImplemented
        return (
            self.field == other.field
            and self.k == other.k
            and self.m == other.m
            and self.floor == other.floor
            and self.components == other.components
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        floor = "complete" if self.floor is None else f"floor={self.floor}"
        return f"ClassicalSymbol(k={self.k}, m={self.m}, {floor}, degrees={self.degrees})"


def block_sum(a: ClassicalSymbol, b: ClassicalSymbol) -> ClassicalSymbol:
    """a ⊕ b, component by component."""
    if a.field != b.field:
        raise StructuralError(f"Field mismatch: {a.field} vs {b.field}")
    m = max(a.m, b.m)
    floor = lower_floor(a.floor, b.floor)
    comps = []
    for d in set(a.components) | set(b.components):
        if floor is not None and d < floor:
            continue
        ca = a.components.get(d, HomComponent.zero(a.field, a.k, d))
        cb = b.components.get(d, HomComponent.zero(b.field, b.k, d))
        comps.append(ca.block_sum(cb))
    return ClassicalSymbol(a.field, a.k + b.k, m, floor, comps)
