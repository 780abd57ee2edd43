from fractions import Fraction

import numpy as np
import pytest

from wreslab.core import EXACT, F64, GaussianRational, TrigPoly
from wreslab.helpers.exceptions import StructuralError

from . import exact


def test_domain_round_trip():
    x = GaussianRational(Fraction(-3, 7), Fraction(5, 2))
    assert exact.from_domain(exact.to_domain(x)) == x
    m = EXACT.matrix([[1, "1/2"], [GaussianRational(0, 1), 3]])
    assert np.array_equal(exact.object_matrix(exact.domain_matrix(m)), m)


def test_gaussian_det_and_inverse():
    i = GaussianRational(0, 1)
    m = EXACT.matrix([[1, i], [2, 3]])
    assert exact.det(m) == 3 - 2 * i
    inv = exact.inv(m)
    assert EXACT.is_zero_matrix(m @ inv - EXACT.eye(2))
    with pytest.raises(StructuralError):
        exact.inv(EXACT.matrix([[1, i], [i, -1]]))


def test_laurent_adjugate():
    # f = 1 + e^{ix}E₁₂ + e^{−ix}E₂₃ + 2E₃₁
    f = (
        TrigPoly.identity(EXACT, 3)
        + TrigPoly.monomial(EXACT, 1, EXACT.matrix([[0, 1, 0], [0, 0, 0], [0, 0, 0]]))
        + TrigPoly.monomial(EXACT, -1, EXACT.matrix([[0, 0, 0], [0, 0, 1], [0, 0, 0]]))
        + TrigPoly.constant(EXACT, EXACT.matrix([[0, 0, 0], [0, 0, 0], [2, 0, 0]]))
    )
    d = f.det()
    # det = 1 + 2·e^{ix}·e^{−ix}
    assert d == TrigPoly.scalar(EXACT, 1, {0: 3})
    adj = f.adjugate()
    assert adj * f == f * adj == TrigPoly.scalar(EXACT, 3, {0: 3})
    assert adj.J <= 2 * f.J


def test_float_det_and_adjugate():
    c = TrigPoly.cos(F64, 1, F64.eye(1))
    s = TrigPoly.sin(F64, 1, F64.eye(1))
    r = TrigPoly.from_entries(F64, [[c, -s], [s, c]])
    assert r.det().isclose(TrigPoly.identity(F64, 1), 1e-12)
    assert r.adjugate().isclose(r.transpose(), 1e-12)

    singular = TrigPoly.from_entries(F64, [[c, c], [c, c]])
    assert singular.det().isclose(TrigPoly.zero(F64, 1), 1e-12)
    with pytest.raises(StructuralError):
        singular.adjugate()
