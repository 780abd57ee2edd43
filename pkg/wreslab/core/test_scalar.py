from fractions import Fraction

import numpy as np
import pytest

from wreslab.helpers.exceptions import SchemaError, StructuralError

from .scalar import EXACT, F64, GaussianRational, Mode, field_for


def test_gaussian_rational_arithmetic():
    i = GaussianRational(0, 1)
    assert i * i == -1
    assert (1 + i) * (1 - i) == 2
    assert (1 + i) / (1 - i) == i
    assert GaussianRational("1/3") + Fraction(2, 3) == 1
    assert (2 * i) ** -1 == GaussianRational(0, "-1/2")
    assert (1 + i).conjugate() == 1 - i
    assert (3 + 4 * i).norm() == 25
    assert complex(GaussianRational("1/2", -1)) == 0.5 - 1j
    assert str(GaussianRational("1/2", -1)) == "1/2-1i"
    assert hash(GaussianRational(3)) == hash(3)

    with pytest.raises(ZeroDivisionError):
        i / 0


def test_exact_field_refuses_floats():
    with pytest.raises(TypeError):
        EXACT.scalar(0.5)
    assert EXACT.scalar("3/4") == GaussianRational(Fraction(3, 4))


def test_exact_matrix_algebra():
    m = EXACT.matrix([[1, 2], [3, 4]])
    assert EXACT.det(m) == -2
    inv = EXACT.inv(m)
    assert EXACT.is_zero_matrix(m @ inv - EXACT.eye(2))
    assert inv[0, 0] == -2 and inv[1, 0] == GaussianRational("3/2")

    with pytest.raises(StructuralError):
        EXACT.inv(EXACT.matrix([[1, 2], [2, 4]]))


def test_float_matrix_algebra():
    m = F64.matrix([[0, 1j], [-1j, 0]])
    assert F64.det(m) == pytest.approx(-1)
    assert np.allclose(F64.inv(m) @ m, np.eye(2))
    assert np.allclose(F64.adjoint(m), m)


def test_scalar_json():
    x = GaussianRational("-2/7", 5)
    assert EXACT.encode(x) == {"re": "-2/7", "im": "5"}
    assert EXACT.decode(EXACT.encode(x)) == x
    assert EXACT.decode(3) == 3
    assert EXACT.decode(["1/2", "1/2"]) == GaussianRational("1/2", "1/2")
    assert F64.decode({"re": 0.25, "im": -1.0}) == 0.25 - 1j
    assert F64.encode(0.25 - 1j) == {"re": 0.25, "im": -1.0}

    with pytest.raises(SchemaError) as e:
        EXACT.decode({"re": 0.5}, "/coeffs/0")
    assert e.value.pointer == "/coeffs/0"
    with pytest.raises(SchemaError):
        EXACT.decode({"re": "1", "phase": "0"})
    with pytest.raises(SchemaError):
        F64.decode(True)


def test_field_for():
    assert field_for("exact") is EXACT
    assert field_for(Mode.F64) is F64
    assert Mode.choices() == ["exact", "f64"]
