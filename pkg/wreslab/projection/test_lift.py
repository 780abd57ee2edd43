import math

import pytest

from wreslab.core import EXACT, F64, GaussianRational, TrigPoly
from wreslab.helpers.exceptions import ConditioningError, PreconditionError
from wreslab.residue import residue_report, wres
from wreslab.symbol import ClassicalSymbol, HomComponent, adjoint

from .lift import (
    algebraic_lift,
    contour_lift,
    defect,
    newton_lift,
    self_adjointize,
    stabilized_residue_check,
)
from .principal import PrincipalProjection, check_grid


def junk(field=EXACT):
    """Order −1 perturbation, neither self-adjoint nor x-independent."""
    f = TrigPoly.monomial(field, 1, field.matrix([[1, 2], [0, GaussianRational(0, 1) if field.exact else 1j]]))
    g = TrigPoly.monomial(field, -1, field.matrix([[0, 0], [3, 1]]))
    return ClassicalSymbol(field, 2, -1, None, [HomComponent(-1, f, g)])


def assert_projection(p, depth, tol=None):
    d = defect(p, depth)
    if p.field.exact:
        assert not d.components
    else:
        assert all(c.plus.max_abs() <= tol and c.minus.max_abs() <= tol for c in d.components.values())


def test_lift_of_principal_is_principal():
    # degree-0 components compose pointwise, so p is already a projection
    p = PrincipalProjection.winding(EXACT)
    lift = algebraic_lift(p, -4)
    assert lift == p.as_symbol().with_floor(-4)

    szego = PrincipalProjection.szego(EXACT)
    assert algebraic_lift(szego, -6) == szego.as_symbol().with_floor(-6)

    const = PrincipalProjection.constant(EXACT, EXACT.matrix([[1, 1], [0, 0]]))
    assert algebraic_lift(const, -2).components.keys() == {0}


def test_newton_lift_with_lower_terms():
    p = PrincipalProjection.winding(EXACT)
    x0 = p.as_symbol() + junk()
    assert defect(x0, -3).components
    lift = newton_lift(x0, -3)
    assert lift.floor == -3
    assert lift.principal() == p.component()
    assert_projection(lift, -3)

    report = residue_report(lift)
    assert report.r == 0
    # tr P_{-1} = tr pP_{-1}p + tr (1-p)P_{-1}(1-p) = 0 for every projection
    assert report.pointwise_vanishing()


def test_lift_independence():
    p = PrincipalProjection.winding(EXACT)
    one = newton_lift(p.as_symbol() + junk(), -3)
    two = newton_lift(p.as_symbol() + junk().scale(GaussianRational(-2, 1)), -3)
    assert one.principal() == two.principal()
    assert wres(one) == wres(two) == 0


def test_newton_preconditions():
    with pytest.raises(PreconditionError):
        newton_lift(ClassicalSymbol.xi(EXACT, 1), -2)
    not_idempotent = ClassicalSymbol.multiplication(TrigPoly.scalar(EXACT, 1, {0: 2}))
    with pytest.raises(PreconditionError):
        newton_lift(not_idempotent, -2)
    with pytest.raises(PreconditionError):
        PrincipalProjection.constant(EXACT, EXACT.matrix([[1, 1], [0, 1]]))


def test_float_idempotency_checked_beyond_interpolation_nodes():
    # p = 2/3 − (2/3)cos x is 0 or 1 at the three nodes 0, 2π/3, 4π/3 only
    p = TrigPoly.scalar(F64, 1, {0: 2 / 3, 1: -1 / 3, -1: -1 / 3})
    assert abs(p.evaluate(math.pi)[0, 0] - 4 / 3) < 1e-12
    with pytest.raises(PreconditionError):
        PrincipalProjection(p, p)
    with pytest.raises(PreconditionError):
        newton_lift(ClassicalSymbol.multiplication(p), -2)
    assert check_grid(p) >= 5

    winding = PrincipalProjection.winding(F64)
    assert check_grid(winding.p_plus) % 2 == 1


def test_contour_lift_constant():
    p = PrincipalProjection.constant(F64, F64.matrix([[1, 1], [0, 0]]))
    lift = contour_lift(p.as_symbol(), -2, nodes=128)
    assert lift.principal().isclose(p.component(), 1e-10)
    assert all(c.plus.max_abs() <= 1e-10 for d, c in lift.components.items() if d < 0)

    szego = PrincipalProjection.szego(EXACT)
    lift = contour_lift(szego.as_symbol(), -3, nodes=128)
    assert lift.field == F64
    assert lift.principal().isclose(szego.cast(F64).component(), 1e-10)


def test_contour_agrees_with_algebraic():
    p = PrincipalProjection.winding(F64)
    x0 = p.as_symbol() + junk(F64)
    algebraic = newton_lift(x0, -3)
    contour = contour_lift(x0, -3, nodes=64)
    assert contour.agrees_with(algebraic, tol=1e-6)
    assert_projection(contour, -3, tol=1e-6)


def test_contour_conditioning():
    half = ClassicalSymbol.multiplication(TrigPoly.scalar(F64, 2, {0: 0.5}))
    with pytest.raises(ConditioningError):
        contour_lift(half, -2, nodes=16)


def test_self_adjointize():
    p = PrincipalProjection.winding(EXACT)
    lift = newton_lift(p.as_symbol() + junk(), -3)
    assert not adjoint(lift, -3).agrees_with(lift)

    q = self_adjointize(lift, -3)
    assert adjoint(q, -3).agrees_with(q)
    assert_projection(q, -3)
    assert q.principal() == lift.principal()
    assert wres(q) == wres(lift)

    szego = PrincipalProjection.szego(EXACT).as_symbol()
    assert self_adjointize(szego, -4) == szego.with_floor(-4)

    skew = PrincipalProjection.constant(EXACT, EXACT.matrix([[1, 1], [0, 0]])).as_symbol()
    with pytest.raises(PreconditionError):
        self_adjointize(skew, -2)


def test_stabilized_residue_check():
    p = PrincipalProjection.winding(EXACT)
    e13 = EXACT.matrix([[0, 0, 1], [0, 0, 0], [0, 0, 0]])
    u = TrigPoly.identity(EXACT, 3) + TrigPoly.monomial(EXACT, 1, e13)
    report = stabilized_residue_check(p, u, 1, -2)
    assert report.ok
    assert report.r == 0


@pytest.mark.slow
def test_winding_lift_at_depth_six():
    p = PrincipalProjection.winding(EXACT)
    lift = newton_lift(p.as_symbol() + junk(), -6)
    assert_projection(lift, -6)
    assert wres(lift) == 0
