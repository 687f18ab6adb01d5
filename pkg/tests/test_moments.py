import cmath
import math

import numpy as np
import pytest

from uncertainty_relations import (DimensionMismatchError, NonFiniteError,
                                   NonRealExpectationError, NotNormalizedError, anticommutator,
                                   commutator, deviation_vector, expectation, moment_set,
                                   pauli_operators, spin1_operators, spin1_state, variance)


def test_expectation():
    jx, jy, jz = spin1_operators()
    sx, sy, sz = pauli_operators()
    assert expectation(np.eye(3), spin1_state(0.4)) == pytest.approx(1.0, abs=1e-12)
    assert expectation(jz, spin1_state(math.pi / 6)) == pytest.approx(0.5, abs=1e-12)
    assert expectation(sx, [1, 0]) == 0.0
    assert expectation(sz, [1, 0]) == 1.0


def test_expectation_errors():
    sx, _, _ = pauli_operators()
    with pytest.raises(NotNormalizedError):
        expectation(sx, [1, 1])
    with pytest.raises(DimensionMismatchError):
        expectation(sx, [1, 0, 0])
    with pytest.raises(DimensionMismatchError):
        expectation(np.zeros((2, 3)), [1, 0])
    with pytest.raises(NonRealExpectationError):
        expectation([[0, 1j], [0, 0]], np.array([1, 1]) / math.sqrt(2))
    with pytest.raises(NonFiniteError):
        expectation(sx, [np.nan, 0])
    with pytest.raises(NonFiniteError):
        expectation([[np.inf, 0], [0, 1]], [1, 0])


def test_deviation_vector():
    jx, _, _ = spin1_operators()
    sx, _, sz = pauli_operators()
    np.testing.assert_array_equal(deviation_vector(sz, [1, 0]), [0, 0])
    np.testing.assert_allclose(deviation_vector(sx, [1, 0]), [0, 1])
    np.testing.assert_allclose(deviation_vector(jx, [1, 0, 0]), [0, 1 / math.sqrt(2), 0],
                               atol=1e-15)


def test_deviation_vector_orthogonal(make_instance):
    for i in range(200):
        dim = 2 + i % 5
        a, b, psi, _ = make_instance(dim, i)
        assert abs(np.vdot(psi, deviation_vector(a, psi))) <= 1e-10
        assert abs(np.vdot(psi, deviation_vector(b, psi))) <= 1e-10


def test_variance():
    jx, _, _ = spin1_operators()
    sx, sy, sz = pauli_operators()
    assert variance(sz, [1, 0]) == 0.0
    assert variance(sy, [1, 0]) == pytest.approx(1.0)
    for theta in (0.0, 0.3, math.pi / 4, 2.0):
        expected = (math.cos(theta) + math.sin(theta)) ** 2 / 2
        assert variance(jx, spin1_state(theta)) == pytest.approx(expected, abs=1e-12)


def test_variance_matches_second_moment(make_instance):
    for i in range(1000):
        a, _, psi, _ = make_instance(2 + i % 4, i)
        mean = expectation(a, psi)
        second = expectation(a @ a, psi)
        value = variance(a, psi)
        assert value >= 0.0
        assert value == pytest.approx(second - mean * mean, rel=1e-10, abs=1e-12)
        assert value == pytest.approx(np.linalg.norm(deviation_vector(a, psi)) ** 2,
                                      rel=1e-12)


def test_commutators():
    sx, sy, sz = pauli_operators()
    np.testing.assert_allclose(commutator(sx, sy), 2j * sz)
    np.testing.assert_allclose(anticommutator(sx, sx), 2 * np.eye(2))
    np.testing.assert_allclose(anticommutator(sx, sy), np.zeros((2, 2)))
    with pytest.raises(DimensionMismatchError):
        commutator(sx, np.eye(3))


def test_moment_set_qubit():
    sx, sy, _ = pauli_operators()
    moments = moment_set(sx, sy, [1, 0])
    assert moments.mean_a == moments.mean_b == 0.0
    assert moments.var_a == pytest.approx(1.0)
    assert moments.var_b == pytest.approx(1.0)
    assert moments.overlap == pytest.approx(1j)
    assert moments.comm == pytest.approx(2j)
    assert moments.acov == pytest.approx(0.0, abs=1e-15)


def test_moment_set_spin1(spin1_thetas):
    jx, jy, _ = spin1_operators()
    for theta in spin1_thetas:
        moments = moment_set(jx, jy, spin1_state(theta))
        cos2 = math.cos(2 * theta)
        assert abs(moments.overlap - 0.5j * cos2) <= 1e-12
        assert abs(moments.comm - 1j * cos2) <= 1e-12
        assert abs(moments.acov) <= 1e-12
        assert moments.var_a == pytest.approx((1 + math.sin(2 * theta)) / 2, abs=1e-12)
        assert moments.var_b == pytest.approx((1 - math.sin(2 * theta)) / 2, abs=1e-12)


def test_moment_set_same_observable(make_instance):
    a, _, psi, _ = make_instance(4, 0)
    moments = moment_set(a, a, psi)
    assert moments.comm == 0
    assert moments.overlap == pytest.approx(moments.var_a, rel=1e-12)
    assert moments.acov == pytest.approx(2 * moments.var_a, rel=1e-10)


def test_moment_set_identities(make_instance):
    for i in range(500):
        a, b, psi, _ = make_instance(2 + i % 7, i)
        m = moment_set(a, b, psi)
        scale = 1.0 + m.var_a + m.var_b
        assert abs(m.comm.real) <= 1e-12 * scale
        assert abs(m.comm - (m.overlap - m.overlap.conjugate())) <= 1e-10 * scale
        assert m.acov == pytest.approx(2 * m.overlap.real, abs=1e-10 * scale)
        assert abs(m.overlap) ** 2 == pytest.approx(
                0.25 * abs(m.comm) ** 2 + 0.25 * m.acov ** 2, rel=1e-9, abs=1e-12)


def test_moment_set_global_phase(make_instance):
    for i in range(50):
        a, b, psi, _ = make_instance(3, i)
        phase = cmath.exp(1j * (0.1 + i))
        reference = moment_set(a, b, psi)
        rotated = moment_set(a, b, phase * psi)
        np.testing.assert_allclose(np.array(rotated, dtype=complex),
                                   np.array(reference, dtype=complex), rtol=1e-10, atol=1e-12)
