# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
"""JSON documents for symbols, jets and nerves.

Scalars are {"re": "p/q", "im": "p/q"} in exact mode and {"re": x, "im": y}
in f64 mode. Every decode error is a SchemaError carrying the JSON pointer
of the offending value.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import numpy as np

from wreslab.cocycle.nerve import NerveData, TransitionSample
from wreslab.core.scalar import F64, Field, Mode, field_for
from wreslab.core.trigpoly import TrigPoly
from wreslab.filtered.jet import MatrixJet
from wreslab.helpers import logging
from wreslab.helpers.exceptions import NonBugError, SchemaError, StructuralError
from wreslab.symbol.classical import ClassicalSymbol
from wreslab.symbol.homogeneous import HomComponent


def _get(obj: Any, key: str, kind: type | tuple[type, ...], pointer: str, default: Any = ...) -> Any:
    if not isinstance(obj, dict):
        raise SchemaError(pointer, f"expected an object, got {type(obj).__name__}")
    if key not in obj:
        if default is not ...:
            return default
        raise SchemaError(f"{pointer}/{key}", "missing")
    value = obj[key]
    # bool is an int subclass
    if isinstance(value, bool) and bool not in (kind if isinstance(kind, tuple) else (kind,)):
        raise SchemaError(f"{pointer}/{key}", f"expected {kind}, got a boolean")
    if not isinstance(value, kind):
        raise SchemaError(f"{pointer}/{key}", f"expected {kind}, got {type(value).__name__}")
    return value


def _field(obj: Any, pointer: str, default: Mode | None) -> Field:
    mode = _get(obj, "mode", str, pointer, None)
    if mode is None:
        if default is None:
            raise SchemaError(f"{pointer}/mode", "missing")
        return field_for(default)
    if mode not in Mode.choices():
        raise SchemaError(f"{pointer}/mode", f"unknown mode {mode!r}, expected one of {Mode.choices()}")
    return field_for(mode)


# Matrices and trigonometric polynomials


def encode_matrix(field: Field, m: np.ndarray) -> list[list[Any]]:
    return [[field.encode(x) for x in row] for row in m]


def decode_matrix(field: Field, obj: Any, pointer: str, k: int | None = None) -> np.ndarray:
    if not isinstance(obj, list) or not obj or not all(isinstance(row, list) for row in obj):
        raise SchemaError(pointer, "expected a non-empty list of rows")
    n = len(obj)
    if k is not None and n != k:
        raise SchemaError(pointer, f"expected {k} rows, got {n}")
    for r, row in enumerate(obj):
        if len(row) != n:
            raise SchemaError(f"{pointer}/{r}", f"expected {n} entries, got {len(row)}")
    return field.matrix([[field.decode(x, f"{pointer}/{r}/{c}") for c, x in enumerate(row)] for r, row in enumerate(obj)])


def encode_trigpoly(f: TrigPoly) -> dict[str, Any]:
    out: dict[str, Any] = {
        "J": f.J,
        "coeffs": [{"j": j, "matrix": encode_matrix(f.field, f.coeffs[j])} for j in sorted(f.coeffs)],
    }
    if f.truncated:
        out["truncated"] = True
    return out


def decode_trigpoly(field: Field, obj: Any, pointer: str, k: int) -> TrigPoly:
    coeffs_obj = _get(obj, "coeffs", list, pointer)
    coeffs: dict[int, np.ndarray] = {}
    for n, entry in enumerate(coeffs_obj):
        p = f"{pointer}/coeffs/{n}"
        j = _get(entry, "j", int, p)
        if j in coeffs:
            raise SchemaError(f"{p}/j", f"duplicate mode {j}")
        coeffs[j] = decode_matrix(field, _get(entry, "matrix", list, p), f"{p}/matrix", k)
    truncated = _get(obj, "truncated", bool, pointer, False)
    f = TrigPoly(field, k, coeffs, truncated)
    declared = _get(obj, "J", int, pointer, None)
    if declared is not None and declared != f.J:
        raise SchemaError(f"{pointer}/J", f"declared J={declared} but the coefficients reach {f.J}")
    return f


# Symbols


def encode_symbol(a: ClassicalSymbol) -> dict[str, Any]:
    return {
        "mode": str(a.field.mode),
        "k": a.k,
        "order": a.m,
        "floor": a.floor,
        "components": [
            {
                "degree": d,
                "plus": encode_trigpoly(a.components[d].plus),
                "minus": encode_trigpoly(a.components[d].minus),
            }
            for d in sorted(a.components, reverse=True)
        ],
    }


def decode_symbol(obj: Any, default_mode: Mode | None = None, pointer: str = "") -> ClassicalSymbol:
    field = _field(obj, pointer, default_mode)
    k = _get(obj, "k", int, pointer)
    if k < 1:
        raise SchemaError(f"{pointer}/k", f"matrix dimension must be positive, got {k}")
    order = _get(obj, "order", int, pointer)
    floor = _get(obj, "floor", (int, type(None)), pointer, None)
    if floor is not None and floor > order:
        raise SchemaError(f"{pointer}/floor", f"floor {floor} lies above the order {order}")
    components = []
    seen = set()
    for n, entry in enumerate(_get(obj, "components", list, pointer)):
        p = f"{pointer}/components/{n}"
        d = _get(entry, "degree", int, p)
        if d in seen:
            raise SchemaError(f"{p}/degree", f"duplicate degree {d}")
        seen.add(d)
        if d > order:
            raise SchemaError(f"{p}/degree", f"degree {d} exceeds the order {order}")
        if floor is not None and d < floor:
            raise SchemaError(f"{p}/degree", f"degree {d} lies below the floor {floor}")
        plus = decode_trigpoly(field, _get(entry, "plus", dict, p), f"{p}/plus", k)
        minus = decode_trigpoly(field, _get(entry, "minus", dict, p), f"{p}/minus", k)
        components.append(HomComponent(d, plus, minus))
    try:
        return ClassicalSymbol(field, k, order, floor, components)
    except StructuralError as e:
        raise SchemaError(pointer, str(e))


# Jets


def _jet_scalar(field: Field, x: Any) -> Any:
    """Float jet entries are plain numbers, or [re, im] pairs when complex."""
    if field.exact:
        return field.encode(x)
    c = complex(x)
    return c.real if c.imag == 0 else [c.real, c.imag]


def encode_jet(a: MatrixJet) -> dict[str, Any]:
    return {
        "mode": str(a.field.mode),
        "k": a.k,
        "n_levels": a.N,
        "coeffs": [[[_jet_scalar(a.field, x) for x in row] for row in c] for c in a.coeffs],
    }


def decode_jet(obj: Any, default_mode: Mode | None = None, pointer: str = "") -> MatrixJet:
    field = _field(obj, pointer, default_mode)
    k = _get(obj, "k", int, pointer)
    n = _get(obj, "n_levels", int, pointer)
    if k < 1 or n < 1:
        raise SchemaError(pointer, f"need positive k and n_levels, got k={k}, n_levels={n}")
    coeffs = _get(obj, "coeffs", list, pointer)
    if len(coeffs) != n:
        raise SchemaError(f"{pointer}/coeffs", f"expected {n} levels, got {len(coeffs)}")
    return MatrixJet(field, k, n, [decode_matrix(field, c, f"{pointer}/coeffs/{j}", k) for j, c in enumerate(coeffs)])


# Nerves


def _chart_tuple(obj: Any, length: int, pointer: str) -> tuple[Any, ...]:
    if not isinstance(obj, list) or len(obj) != length:
        raise SchemaError(pointer, f"expected a list of {length} chart ids")
    for n, c in enumerate(obj):
        if isinstance(c, bool) or not isinstance(c, (int, str)):
            raise SchemaError(f"{pointer}/{n}", "chart ids are integers or strings")
    return tuple(obj)


def _point(obj: Any, pointer: str) -> Any:
    if isinstance(obj, bool) or not isinstance(obj, (int, float, str)):
        raise SchemaError(pointer, "sample points are numbers or strings")
    return obj


def decode_nerve(obj: Any, pointer: str = "") -> tuple[NerveData, TransitionSample]:
    """Read a nerve document; transition maps are always f64."""
    k = _get(obj, "k", int, pointer)
    charts = _get(obj, "charts", list, pointer)
    overlaps = {}
    maps: dict[Any, dict[Any, np.ndarray]] = {}
    for n, entry in enumerate(_get(obj, "overlaps", list, pointer)):
        p = f"{pointer}/overlaps/{n}"
        pair = _chart_tuple(_get(entry, "pair", list, p), 2, f"{p}/pair")
        if pair in overlaps:
            raise SchemaError(f"{p}/pair", f"duplicate overlap {list(pair)}")
        samples = {}
        for m, sample in enumerate(_get(entry, "samples", list, p)):
            q = f"{p}/samples/{m}"
            x = _point(_get(sample, "x", (int, float, str), q), f"{q}/x")
            y = _point(_get(sample, "y", (int, float, str), q), f"{q}/y")
            samples[(x, y)] = decode_matrix(F64, _get(sample, "map", list, q), f"{q}/map", k * k)
        overlaps[pair] = list(samples)
        maps[pair] = samples

    def cells(key: str, length: int) -> dict[tuple[Any, ...], list[Any]]:
        out = {}
        for n, entry in enumerate(_get(obj, key, list, pointer, [])):
            p = f"{pointer}/{key}/{n}"
            charts_ = _chart_tuple(_get(entry, "charts", list, p), length, f"{p}/charts")
            out[charts_] = [_point(x, f"{p}/samples/{m}") for m, x in enumerate(_get(entry, "samples", list, p))]
        return out

    try:
        nerve = NerveData(charts, overlaps, cells("triples", 3), cells("tetrahedra", 4))
    except StructuralError as e:
        raise SchemaError(pointer, str(e))
    return nerve, TransitionSample(k, maps)


def encode_nerve(nerve: NerveData, sample: TransitionSample) -> dict[str, Any]:
    return {
        "k": sample.k,
        "charts": list(nerve.charts),
        "overlaps": [
            {
                "pair": list(pair),
                "samples": [
                    {"x": x, "y": y, "map": encode_matrix(F64, sample.maps[pair][(x, y)])}
                    for x, y in points
                ],
            }
            for pair, points in nerve.overlaps.items()
        ],
        "triples": [{"charts": list(t), "samples": list(p)} for t, p in nerve.triples.items()],
        "tetrahedra": [{"charts": list(t), "samples": list(p)} for t, p in nerve.tetrahedra.items()],
    }


# Files


def dumps(obj: Any) -> str:
    """Deterministic JSON text: fixed indentation, insertion-ordered keys."""
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def read_json(path: Path) -> Any:
    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except FileNotFoundError:
        raise NonBugError(f"File not found: {path}")
    except json.JSONDecodeError as e:
        raise SchemaError("", f"{path}: invalid JSON: {e}")


def write_json(path: Path, obj: Any) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps(obj))
    logging.debug(f"Wrote {path}")


def load_symbol(path: Path, default_mode: Mode | None = None) -> ClassicalSymbol:
    return decode_symbol(read_json(path), default_mode)


def save_symbol(path: Path, a: ClassicalSymbol) -> None:
    write_json(path, encode_symbol(a))


def load_jet(path: Path, default_mode: Mode | None = None) -> MatrixJet:
    return decode_jet(read_json(path), default_mode)


def load_nerve(path: Path) -> tuple[NerveData, TransitionSample]:
    return decode_nerve(read_json(path))
