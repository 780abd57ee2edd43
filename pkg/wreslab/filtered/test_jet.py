import pytest

from wreslab.core import EXACT, F64
from wreslab.helpers.exceptions import StructuralError

from .jet import MatrixJet, jet_ring_ops
from .trace import ResidueTraceSpec, all_traces, residue_trace


def unit(i, j, k=2, field=EXACT):
    m = field.zeros(k)
    m[i, j] = field.one
    return m


def t(level, matrix, N=4, field=EXACT):
    return MatrixJet.monomial(field, N, level, matrix)


def test_ring_ops_examples():
    e11, e12, e21, e22 = unit(0, 0), unit(0, 1), unit(1, 0), unit(1, 1)
    assert jet_ring_ops(t(1, e12), t(1, e21), "mul") == t(2, e11)

    a = t(0, e12) + t(2, e21)
    one = MatrixJet.identity(EXACT, 2, 4)
    assert jet_ring_ops(a, one, "mul") == a
    assert jet_ring_ops(one, a, "mul") == a

    assert jet_ring_ops(t(0, e12), t(1, e21), "commutator") == t(1, e11 - e22)
    assert jet_ring_ops(a, a, "sub").is_zero()
    assert jet_ring_ops(a, a, "add") == a.scale(2)


def test_truncation_and_levels():
    e12, e21 = unit(0, 1), unit(1, 0)
    assert (t(2, e12, N=3) * t(1, e21, N=3)).is_zero()
    assert t(5, e12).is_zero()

    a = t(1, e12) + t(3, e21)
    b = t(2, e21) + t(3, e12)
    assert a.level() == 1 and b.level() == 2
    assert (a * b).level() >= 3
    assert MatrixJet.zero(EXACT, 2, 4).level() == 4


def test_mismatch():
    with pytest.raises(StructuralError):
        t(0, unit(0, 0)) + MatrixJet.identity(EXACT, 3, 4)
    with pytest.raises(StructuralError):
        t(0, unit(0, 0)) * MatrixJet.identity(EXACT, 2, 5)
    with pytest.raises(StructuralError):
        t(0, unit(0, 0)) + MatrixJet.identity(F64, 2, 4)
    with pytest.raises(StructuralError):
        MatrixJet(EXACT, 2, 3, [EXACT.eye(2)])
    with pytest.raises(ValueError):
        jet_ring_ops(t(0, unit(0, 0)), t(0, unit(0, 0)), "div")


def test_residue_trace_examples():
    assert residue_trace(t(0, unit(0, 0)), ResidueTraceSpec(0)) == 1
    assert residue_trace(t(1, unit(0, 0)), ResidueTraceSpec(1)) == 1
    comm = t(0, unit(0, 1)).commutator(t(1, unit(1, 0)))
    assert residue_trace(comm, ResidueTraceSpec(1)) == 0

    # vanishes above the filtration level
    assert residue_trace(t(2, EXACT.eye(2)), ResidueTraceSpec(1)) == 0

    with pytest.raises(StructuralError):
        residue_trace(t(0, unit(0, 0)), ResidueTraceSpec(4))
    with pytest.raises(StructuralError):
        ResidueTraceSpec(-1)


def test_trace_property():
    a = t(0, EXACT.matrix([[1, 2], [3, 4]])) + t(1, EXACT.matrix([[0, 1], [5, "1/2"]]))
    b = t(0, EXACT.matrix([[2, 0], [1, 1]])) + t(2, EXACT.matrix([[7, 1], [0, 3]]))
    assert all_traces(a * b) == all_traces(b * a)
    assert all(x == 0 for x in all_traces(a.commutator(b)))
