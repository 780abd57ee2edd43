import cmath
import itertools

import numpy as np
import pytest

from wreslab.helpers.exceptions import NotAConvolutionBundleError, PreconditionError, StructureError

from .dd import analyze_nerve, dd_cocycle, root_index
from .fixtures import (
    nerve_from_frames,
    IDENTITY,
    POINTS,
    SIGMA1,
    four_chart_frames,
    four_chart_nerve,
    quaternion_frames,
    quaternion_nerve,
    rotation,
    rotation_sample,
)
from .nerve import NerveData, TransitionSample
from .transition import decompose_transition, transition_sample, verify_lambda

PAIRS = list(itertools.product(POINTS, POINTS))


def constant_frames(frames):
    return {pair: {x: u for x in POINTS} for pair, u in frames.items()}


def test_trivial_transition():
    s = transition_sample(2, {(1, 2): lambda x: IDENTITY}, {(1, 2): lambda x, y: 1}, {(1, 2): PAIRS})
    d = decompose_transition(s)
    assert all(abs(v - 1) <= 1e-12 for v in d.lambdas[(1, 2)].values())
    assert all(np.allclose(u, IDENTITY) for u in d.phis[(1, 2)].values())
    assert d.reconstruction_error <= 1e-12


def test_phase_transition():
    s = transition_sample(2, {(1, 2): lambda x: IDENTITY}, {(1, 2): lambda x, y: cmath.exp(1j * (x - y))}, {(1, 2): PAIRS})
    d = decompose_transition(s)
    for (x, y), v in d.lambdas[(1, 2)].items():
        assert abs(v - cmath.exp(1j * (x - y))) <= 1e-12
    assert verify_lambda(d.lambdas[(1, 2)]).ok()


def test_rotation_round_trip():
    d = decompose_transition(rotation_sample())
    assert d.reconstruction_error <= 1e-10
    for x, u in d.phis[(1, 2)].items():
        assert np.allclose(u, rotation(x), atol=1e-12)
    assert all(abs(v - 1) <= 1e-10 for v in d.lambdas[(1, 2)].values())


def test_decompose_errors():
    s = TransitionSample(2, {(1, 2): {(0.0, 0.25): np.eye(4, dtype=np.complex128)}})
    with pytest.raises(PreconditionError):
        decompose_transition(s)

    # Φ(x, y)(I) = diag(1, 2) is not scalar
    bad = np.diag([1, 1, 1, 2]).astype(np.complex128)
    s = TransitionSample(2, {(1, 2): {(0.0, 0.0): np.eye(4, dtype=np.complex128), (0.0, 0.5): bad, (0.5, 0.5): np.eye(4, dtype=np.complex128)}})
    with pytest.raises(StructureError):
        decompose_transition(s)


def test_verify_lambda():
    ones = {(x, y): 1.0 for x, y in PAIRS}
    report = verify_lambda(ones)
    assert report.ok()
    assert report.checked["diagonal"] == len(POINTS)

    phase = {(x, y): cmath.exp(1j * (x - y)) for x, y in PAIRS}
    report = verify_lambda(phase)
    assert report.ok() and report.multiplicative <= 1e-12

    corrupted = {key: v + 0.01 for key, v in phase.items()}
    report = verify_lambda(corrupted)
    assert report.multiplicative > 1e-3
    assert not report.ok()

    assert verify_lambda(ones).merge(report).checked["diagonal"] == 2 * len(POINTS)


def test_trivial_cocycle():
    nerve = NerveData([1, 2, 3], {p: PAIRS for p in [(1, 2), (2, 3), (1, 3)]}, {(1, 2, 3): POINTS})
    phis = constant_frames({p: IDENTITY for p in nerve.overlaps})
    report = dd_cocycle(nerve, phis, 2)
    assert abs(report.zeta[(1, 2, 3)] - 1) <= 1e-12
    assert report.ok()


def test_quaternion_fixture():
    nerve, sample = quaternion_nerve()
    d = decompose_transition(sample)
    assert d.reconstruction_error <= 1e-10
    for pair, u in quaternion_frames().items():
        assert all(np.allclose(v, u, atol=1e-12) for v in d.phis[pair].values())
    for lam in d.lambdas.values():
        assert verify_lambda(lam).ok()

    report = dd_cocycle(nerve, d.phis, 2)
    zeta = report.zeta[(1, 2, 3)]
    assert abs(zeta + 1) <= 1e-10
    assert abs(zeta**2 - 1) <= 1e-10
    assert root_index(zeta, 2) == 1
    assert report.as_dict()["triples"][0]["root"] == 1


def test_four_chart_closedness():
    nerve, sample = four_chart_nerve()
    d = decompose_transition(sample)
    report = dd_cocycle(nerve, d.phis, 2)
    assert len(report.zeta) == 4
    assert all(abs(z + 1) <= 1e-10 for z in report.zeta.values())
    assert abs(report.coboundary[(1, 2, 3, 4)] - 1) <= 1e-10
    assert report.ok()


def test_coboundary_change():
    nerve, _ = four_chart_nerve()
    frames = four_chart_frames()
    frames[(1, 2)] = -frames[(1, 2)]
    report = dd_cocycle(nerve, constant_frames(frames), 2)
    # the faces through the edge 12 flip sign
    assert abs(report.zeta[(1, 2, 3)] - 1) <= 1e-10
    assert abs(report.zeta[(1, 2, 4)] - 1) <= 1e-10
    assert abs(report.zeta[(1, 3, 4)] + 1) <= 1e-10
    assert report.closedness_violation <= 1e-10


def test_not_a_convolution_bundle():
    nerve, _ = quaternion_nerve()
    frames = constant_frames(quaternion_frames())
    frames[(1, 2)][POINTS[1]] = -frames[(1, 2)][POINTS[1]]
    with pytest.raises(NotAConvolutionBundleError):
        dd_cocycle(nerve, frames, 2)

    frames = constant_frames(quaternion_frames())
    frames[(1, 2)] = {x: 1j * SIGMA1 @ rotation(0.1) for x in POINTS}
    with pytest.raises(NotAConvolutionBundleError):
        dd_cocycle(nerve, frames, 2)


def test_missing_frames():
    nerve, _ = quaternion_nerve()
    frames = constant_frames(quaternion_frames())
    del frames[(1, 3)]
    with pytest.raises(PreconditionError):
        dd_cocycle(nerve, frames, 2)


def test_winding_frames_stay_continuous():
    # g₁ = R(4x), g₂ = I, g₃ = R(−4x): the entries of φ_ab = g_a g_b⁻¹ leave
    # every fixed argument window as x runs around the circle
    g = {1: lambda x: rotation(4 * x), 2: lambda x: IDENTITY, 3: lambda x: rotation(-4 * x)}
    frames = {(a, b): (lambda x, a=a, b=b: g[a](x) @ np.linalg.inv(g[b](x))) for a, b in [(1, 2), (2, 3), (1, 3)]}
    points = [2 * np.pi * i / 48 for i in range(48)]
    nerve, sample = nerve_from_frames(frames, [(1, 2, 3)], points=points)

    report = analyze_nerve(nerve, sample)
    assert abs(report.cocycle.zeta[(1, 2, 3)] - 1) <= 1e-10
    assert report.cocycle.deviation[(1, 2, 3)] <= 1e-10
    for x in points:
        assert np.allclose(report.decomposition.phis[(1, 3)][x], rotation(8 * x), atol=1e-10)
