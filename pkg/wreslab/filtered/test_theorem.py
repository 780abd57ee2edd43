import numpy as np
import pytest
import sympy

from wreslab.core import EXACT, F64, GaussianRational
from wreslab.helpers.exceptions import PreconditionError, StructuralError

from .idempotent import (
    is_idempotent,
    jet_newton_steps,
    newton_idempotent_lift,
    perturbed_lift,
    unit_conjugate,
    unit_inverse,
)
from .jet import MatrixJet
from .theorem import (
    abcd_decompose,
    commutator_representation,
    expansion_coefficients,
    series_residual,
    verify_projection_trace_invariance,
)
from .trace import ResidueTraceSpec, all_traces

E11 = EXACT.matrix([[1, 0], [0, 0]])
E12 = EXACT.matrix([[0, 1], [0, 0]])
E21 = EXACT.matrix([[0, 0], [1, 0]])


def jet(terms, N=4, field=EXACT):
    return MatrixJet.from_terms(field, terms[0].shape[0] if 0 in terms else 2, N, terms)


def test_newton_steps():
    assert [jet_newton_steps(n) for n in (1, 2, 3, 4, 5, 8, 9)] == [1, 2, 3, 3, 4, 4, 5]


def test_newton_idempotent_lift_examples():
    p = jet({0: E11})
    assert newton_idempotent_lift(p) == p

    x0 = jet({0: E11, 1: E21})
    assert newton_idempotent_lift(x0) == x0

    x0 = jet({0: E11, 1: EXACT.eye(2)})
    assert newton_idempotent_lift(x0) == p


def test_newton_idempotent_lift_generic():
    z = EXACT.matrix([[1, 2, 0], [0, GaussianRational(0, 1), 3], ["1/2", 0, -1]])
    p0 = MatrixJet.constant(EXACT, 6, EXACT.matrix([[1, 0, 0], [0, 1, 0], [0, 0, 0]]))
    p = perturbed_lift(p0, z)
    assert is_idempotent(p)
    assert (p - p0).level() >= 1


def test_newton_idempotent_lift_precondition():
    with pytest.raises(PreconditionError):
        newton_idempotent_lift(jet({0: EXACT.eye(2) + EXACT.eye(2)}))


def test_unit_inverse():
    u = jet({0: EXACT.eye(2), 1: E12 + E21, 2: E11})
    assert u * unit_inverse(u) == MatrixJet.identity(EXACT, 2, 4)
    with pytest.raises(PreconditionError):
        unit_inverse(jet({0: E11}))


def test_abcd_examples():
    p = jet({0: E11})
    zero = MatrixJet.zero(EXACT, 2, 4)
    with pytest.raises(PreconditionError):
        abcd_decompose(p, jet({0: EXACT.eye(2) - E11}))
    assert abcd_decompose(p, p) == (zero, zero, zero, zero)

    a, b, c, d = abcd_decompose(p, jet({0: E11, 1: E12}))
    assert (a, b, c, d) == (zero, jet({1: E12}), zero, zero)

    conjugated = unit_conjugate(p, E12)
    assert conjugated == jet({0: E11, 1: -E12})
    a, b, c, d = abcd_decompose(p, conjugated)
    assert (a, b, c, d) == (zero, jet({1: -E12}), zero, zero)


def test_abcd_preconditions():
    p = jet({0: E11})
    with pytest.raises(PreconditionError):
        abcd_decompose(jet({0: E11, 1: EXACT.eye(2)}), p)
    with pytest.raises(PreconditionError):
        abcd_decompose(p, jet({0: E11 + E11}))


def test_expansion_coefficients():
    assert expansion_coefficients(4) == [-1, -1, -2, -5]
    assert expansion_coefficients(1) == [-1]
    assert expansion_coefficients(8)[-1] == -429
    for ell in range(1, 10):
        assert series_residual(expansion_coefficients(ell)) == [0] * ell
    assert series_residual([-1, -1, -2, -4]) != [0] * 4
    with pytest.raises(StructuralError):
        expansion_coefficients(0)


def test_expansion_coefficients_match_closed_form():
    # x = (√(1 − 4y) − 1)/2 is the root of x² + x + y with x(0) = 0
    y = sympy.Symbol("y")
    series = sympy.series((sympy.sqrt(1 - 4 * y) - 1) / 2, y, 0, 11).removeO()
    assert expansion_coefficients(10) == [int(series.coeff(y, n)) for n in range(1, 11)]
    assert series.coeff(y, 0) == 0


def test_verify_examples():
    p = jet({0: E11})
    report = verify_projection_trace_invariance(p, jet({0: E11, 1: E12}), ResidueTraceSpec(1))
    assert report.tau_p == report.tau_ptilde == 0
    assert report.difference == 0
    assert report.identities_hold
    assert report.ok

    report = verify_projection_trace_invariance(p, p, ResidueTraceSpec(0))
    assert report.tau_p == 1 and report.ok


def random_exact(rng, k):
    return EXACT.matrix(
        [[GaussianRational(int(rng.integers(-3, 4)), int(rng.integers(-3, 4))) for _ in range(k)] for _ in range(k)]
    )


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_random_pairs(seed):
    rng = np.random.default_rng(seed)
    N, k = 6, 3
    p0 = MatrixJet.constant(EXACT, N, EXACT.matrix([[1, 0, 0], [0, 1, 0], [0, 0, 0]]))
    p = unit_conjugate(p0, random_exact(rng, k))
    assert all_traces(p) == all_traces(p0)

    for ptilde in (perturbed_lift(p, random_exact(rng, k)), unit_conjugate(p, random_exact(rng, k))):
        for j in range(N):
            report = verify_projection_trace_invariance(p, ptilde, ResidueTraceSpec(j))
            assert report.difference == 0
            assert report.identities_hold
            assert report.commutator_residual_level == N
            assert [e.ell for e in report.expansion] == [1, 2, 3, 4]
            assert all(e.ok for e in report.expansion)
            assert report.ok


def test_commutator_representation():
    p = jet({0: E11}, N=5)
    ptilde = unit_conjugate(p, E12 + E21)
    a, b, c, d = abcd_decompose(p, ptilde)
    assert a + d == commutator_representation(b, c)


def test_float_mode():
    rng = np.random.default_rng(5)
    N = 5
    p0 = MatrixJet.constant(F64, N, F64.matrix([[1, 0], [0, 0]]))
    z = 0.3 * (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
    p = unit_conjugate(p0, z)
    ptilde = perturbed_lift(p, z.T)
    report = verify_projection_trace_invariance(p, ptilde, ResidueTraceSpec(2))
    assert report.identity_a <= 1e-10
    assert abs(report.difference) <= 1e-10
    assert report.ok
