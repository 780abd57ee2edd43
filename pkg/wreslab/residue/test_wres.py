import math

import pytest

from wreslab.core import EXACT, F64, GaussianRational, TrigPoly
from wreslab.helpers.exceptions import PrecisionError, StructuralError
from wreslab.symbol import ClassicalSymbol, HomComponent, change_of_frame, commutator

from .wres import residue_report, wres, wres_density


def e(j, k=1, field=EXACT):
    return TrigPoly.scalar(field, k, {j: 1})


def test_density_examples():
    inv_xi = ClassicalSymbol.xi(EXACT, 1, -1)
    assert wres_density(inv_xi).is_zero()

    for k in (1, 2, 3):
        a = ClassicalSymbol.abs_xi(EXACT, k, -1)
        assert wres_density(a) == TrigPoly.scalar(EXACT, 1, {0: 2 * k})

    a = ClassicalSymbol(EXACT, 1, -1, None, [HomComponent.abs_xi_power(EXACT, 1, -1, e(1))])
    assert wres_density(a) == TrigPoly.scalar(EXACT, 1, {1: 2})
    assert wres(a) == 0


def test_wres_value():
    assert wres(ClassicalSymbol.abs_xi(EXACT, 1, -1)) == 2
    report = residue_report(ClassicalSymbol.abs_xi(F64, 1, -1))
    assert report.as_dict(geometric_residue=True)["wres"]["re"] == pytest.approx(4 * math.pi)
    with pytest.raises(StructuralError):
        residue_report(ClassicalSymbol.abs_xi(EXACT, 1, -1)).as_dict(geometric_residue=True)


def test_commutator_has_zero_residue():
    b = ClassicalSymbol(EXACT, 1, -1, None, [HomComponent.abs_xi_power(EXACT, 1, -1, e(1))])
    c = commutator(ClassicalSymbol.xi(EXACT, 1), b)
    report = residue_report(c)
    assert report.density == TrigPoly.scalar(EXACT, 1, {1: 2})
    assert report.r == 0
    assert not report.pointwise_vanishing()


def test_trace_property():
    f = TrigPoly.monomial(EXACT, 1, EXACT.matrix([[1, GaussianRational(0, 1)], [0, 2]]))
    g = TrigPoly.monomial(EXACT, -2, EXACT.matrix([[0, 1], ["1/2", 0]])) + TrigPoly.identity(EXACT, 2)
    a = ClassicalSymbol(
        EXACT,
        2,
        1,
        -3,
        [HomComponent.abs_xi_power(EXACT, 2, 1, f), HomComponent(0, g, f.adjoint())],
    )
    b = ClassicalSymbol(
        EXACT,
        2,
        -1,
        -4,
        [HomComponent.xi_power(EXACT, 2, -1, g * f), HomComponent(-2, f, g)],
    )
    c = commutator(a, b)
    assert c.floor <= -1
    assert wres(c) == 0


def test_precision():
    a = ClassicalSymbol.abs_xi(EXACT, 1, 1, floor=0)
    with pytest.raises(PrecisionError):
        wres_density(a)
    # known to be zero below the order
    assert wres_density(ClassicalSymbol.abs_xi(EXACT, 1, -2, floor=-3)).is_zero()


def test_locality_and_linearity():
    a = ClassicalSymbol(
        EXACT,
        1,
        0,
        -2,
        [
            HomComponent.abs_xi_power(EXACT, 1, -1, e(0)),
            HomComponent.xi_power(EXACT, 1, 0, e(2)),
        ],
    )
    other = a + ClassicalSymbol(EXACT, 1, 0, -2, [HomComponent(-2, e(1), e(1)), HomComponent(0, e(3), e(0))])
    assert wres_density(other) == wres_density(a)

    b = ClassicalSymbol(EXACT, 1, -1, -1, [HomComponent(-1, e(0).scale(3), e(-1))])
    alpha, beta = GaussianRational(2, 1), GaussianRational("1/3")
    lhs = wres(a.scale(alpha) + b.scale(beta))
    assert lhs == alpha * wres(a) + beta * wres(b)


def test_frame_invariance():
    c = TrigPoly.cos(EXACT, 1, EXACT.eye(1))
    s = TrigPoly.sin(EXACT, 1, EXACT.eye(1))
    r = TrigPoly.from_entries(EXACT, [[c, -s], [s, c]])
    f = TrigPoly.monomial(EXACT, 1, EXACT.matrix([[1, 2], [0, 1]]))
    a = ClassicalSymbol(
        EXACT,
        2,
        1,
        -2,
        [
            HomComponent.abs_xi_power(EXACT, 2, 1, f),
            HomComponent.xi_power(EXACT, 2, 0, f.adjoint()),
            HomComponent(-1, f * f, f.adjoint()),
        ],
    )
    moved = change_of_frame(a, e(2), r)
    assert wres_density(moved) == wres_density(a)
