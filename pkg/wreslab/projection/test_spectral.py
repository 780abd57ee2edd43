import numpy as np
import pytest

from wreslab.core import EXACT, F64, TrigPoly
from wreslab.helpers.exceptions import EllipticityError, PreconditionError, StructuralError
from wreslab.residue import wres

from .lift import algebraic_lift
from .principal import PrincipalProjection
from .spectral import first_order_system, positive_spectral_projection_symbol

SIGMA1 = [[0, 1], [1, 0]]
SIGMA3 = [[1, 0], [0, -1]]


def test_scalar_system_gives_szego():
    one = TrigPoly.identity(F64, 1)
    p = positive_spectral_projection_symbol(one, TrigPoly.zero(F64, 1))
    assert p.p_plus.isclose(one, 1e-12)
    assert p.p_minus.isclose(TrigPoly.zero(F64, 1), 1e-12)


def test_constant_matrix_system():
    a = TrigPoly.constant(F64, F64.matrix(SIGMA3))
    p = positive_spectral_projection_symbol(a, TrigPoly.zero(F64, 2), grid=9)
    assert p.p_plus.isclose(TrigPoly.constant(F64, F64.matrix([[1, 0], [0, 0]])), 1e-12)
    assert p.p_minus.isclose(TrigPoly.constant(F64, F64.matrix([[0, 0], [0, 1]])), 1e-12)


def test_winding_system():
    a = TrigPoly.cos(F64, 1, F64.matrix(SIGMA3)) + TrigPoly.sin(F64, 1, F64.matrix(SIGMA1))
    p = positive_spectral_projection_symbol(a, TrigPoly.constant(F64, F64.matrix(SIGMA1)))
    one = TrigPoly.identity(F64, 2)
    assert p.p_plus.isclose((one + a).scale(0.5), 1e-10)
    assert p.p_minus.isclose((one - a).scale(0.5), 1e-10)
    assert p.is_self_adjoint()


def test_exact_input_is_accepted():
    a = TrigPoly.constant(EXACT, EXACT.matrix(SIGMA3))
    p = positive_spectral_projection_symbol(a, TrigPoly.zero(EXACT, 2), grid=5)
    assert p.field == F64


def test_random_system_lift_has_zero_residue():
    rng = np.random.default_rng(3)
    h = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    h = 0.05 * (h + h.conj().T)
    a = TrigPoly.constant(F64, F64.matrix(SIGMA3)) + TrigPoly.monomial(F64, 1, h) + TrigPoly.monomial(F64, -1, h.conj().T)
    p = positive_spectral_projection_symbol(a, TrigPoly.zero(F64, 2))
    assert p.is_self_adjoint()
    lift = algebraic_lift(p, -4)
    assert abs(wres(lift)) <= 1e-8


def test_errors():
    zero = TrigPoly.zero(F64, 2)
    singular = TrigPoly.constant(F64, F64.matrix([[1, 0], [0, 0]]))
    with pytest.raises(EllipticityError):
        positive_spectral_projection_symbol(singular, zero)
    skew = TrigPoly.constant(F64, F64.matrix([[1, 1], [0, -1]]))
    with pytest.raises(PreconditionError):
        positive_spectral_projection_symbol(skew, zero)
    with pytest.raises(StructuralError):
        positive_spectral_projection_symbol(singular, zero, grid=8)


def test_first_order_system():
    a = TrigPoly.constant(EXACT, EXACT.matrix(SIGMA3))
    b = TrigPoly.constant(EXACT, EXACT.matrix(SIGMA1))
    d = first_order_system(a, b)
    assert d.m == 1 and d.floor is None
    assert d.is_polynomial()


def test_winding_fixture_is_self_adjoint():
    p = PrincipalProjection.winding(EXACT)
    assert p.is_self_adjoint()
    assert p.p_plus.J == 1
