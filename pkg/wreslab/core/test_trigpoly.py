import math

import numpy as np
import pytest

from wreslab.helpers.exceptions import StructuralError

from .scalar import EXACT, F64, GaussianRational
from .trigpoly import TrigPoly


def e(j, field=EXACT, k=1):
    return TrigPoly.scalar(field, k, {j: 1})


def test_dx_multiplies_by_mode():
    f = TrigPoly.scalar(EXACT, 1, {-2: 3, 0: 1, 5: "1/5"})
    assert f.dx() == TrigPoly.scalar(EXACT, 1, {-2: -6, 5: 1})
    assert f.dx(2) == TrigPoly.scalar(EXACT, 1, {-2: 12, 5: 5})
    assert f.dx(0) == f


def test_product_and_zero_dropping():
    c = TrigPoly.cos(EXACT, 1, EXACT.eye(1))
    s = TrigPoly.sin(EXACT, 1, EXACT.eye(1))
    assert c * c + s * s == TrigPoly.identity(EXACT, 1)
    assert (e(1) * e(-1)).coeffs.keys() == {0}
    assert (e(3) - e(3)).is_zero()
    assert (c * c).J == 2


def test_adjoint_and_trace():
    m = EXACT.matrix([[1, GaussianRational(0, 1)], [0, 2]])
    f = TrigPoly.monomial(EXACT, 1, m)
    fa = f.adjoint()
    assert set(fa.coeffs) == {-1}
    assert fa.coefficient(-1)[1, 0] == GaussianRational(0, -1)
    assert f.trace() == TrigPoly.scalar(EXACT, 1, {1: 3})


def test_det_and_exact_inverse():
    # A rotation by angle x has determinant 1 and inverse R(x)^T
    c = TrigPoly.cos(EXACT, 1, EXACT.eye(1))
    s = TrigPoly.sin(EXACT, 1, EXACT.eye(1))
    r = TrigPoly.from_entries(EXACT, [[c, -s], [s, c]])
    assert r.det() == TrigPoly.identity(EXACT, 1)
    assert r.inverse() == r.transpose()
    assert r * r.inverse() == TrigPoly.identity(EXACT, 2)

    # Monomial determinant
    u = TrigPoly.scalar(EXACT, 1, {3: 2})
    assert u.inverse() == TrigPoly.scalar(EXACT, 1, {-3: "1/2"})


def test_exact_inverse_needs_monomial_det():
    f = TrigPoly.scalar(EXACT, 1, {0: 2, 1: 1})
    with pytest.raises(StructuralError):
        f.inverse()


def test_float_inverse_by_fit():
    f = TrigPoly.scalar(F64, 1, {0: 2, 1: 0.5})
    inv = f.inverse(fit_modes=24)
    assert (f * inv).isclose(TrigPoly.identity(F64, 1), 1e-10)


def test_grid_and_fit():
    f = TrigPoly.scalar(F64, 2, {-1: 1j, 0: 0.5, 2: 2.0})
    grid = f.on_grid(9)
    assert grid.shape == (9, 2, 2)
    assert np.allclose(grid[0], (1j + 0.5 + 2.0) * np.eye(2))
    assert np.allclose(f.evaluate(2 * math.pi / 9), grid[1])
    assert TrigPoly.fit(F64, grid).isclose(f, 1e-12)

    with pytest.raises(StructuralError):
        TrigPoly.fit(EXACT, grid)


def test_block_sum():
    f = e(1).block_sum(e(-1, k=2))
    assert f.k == 3
    assert f.coefficient(1)[0, 0] == 1
    assert f.coefficient(-1)[2, 2] == 1


def test_fourier_cap(monkeypatch):
    monkeypatch.setenv("WRESLAB_CAP_J", "4")
    f = e(3) * e(2)
    assert f.is_zero() and f.truncated
    g = e(2) * e(2) + e(1)
    assert g.J == 4 and not g.truncated
    # truncation is sticky
    assert (f + e(1)).truncated


def test_mismatch():
    with pytest.raises(StructuralError):
        e(1) + e(1, k=2)
    with pytest.raises(StructuralError):
        e(1) * e(1, field=F64)
