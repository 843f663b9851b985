import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.polynomial import hermite as H
from numpy.polynomial import Polynomial

from dwell.basis_ops import (
    BandedSymmetricMatrix,
    BasisSpec,
    hermite_functions,
    kinetic_matrix,
    parity_restrict,
    position_matrix,
    power_matrix,
)
from dwell.errors import ContractError

NODES, WEIGHTS = H.hermgauss(60)


def _hermite_poly(n):
    """Physicists' H_n in the power basis."""
    return Polynomial(H.herm2poly([0] * n + [1]))


def quad_x_power(m, n, k, omega):
    """<m| x^k |n> by Gauss-Hermite quadrature in y = sqrt(omega) x."""
    c = 1.0 / (math.sqrt(math.pi) * math.sqrt(2.0 ** (m + n) * math.factorial(m) * math.factorial(n)))
    f = _hermite_poly(m)(NODES) * _hermite_poly(n)(NODES) * NODES**k
    return c * omega ** (-k / 2) * np.dot(WEIGHTS, f)


def quad_kinetic(m, n, omega):
    """<f_m'|f_n'> with the derivative taken on the polynomial factor."""
    def dpart(j):
        p = _hermite_poly(j)
        return p.deriv()(NODES) - NODES * p(NODES)

    c = 1.0 / (math.sqrt(math.pi) * math.sqrt(2.0 ** (m + n) * math.factorial(m) * math.factorial(n)))
    return c * omega * np.dot(WEIGHTS, dpart(m) * dpart(n))


def test_position_examples():
    X = position_matrix(BasisSpec(0.5, 2))
    assert X[1, 0] == 1.0
    X = position_matrix(BasisSpec(4.0, 3))
    assert X[1, 0] == pytest.approx(math.sqrt(1 / 8), abs=1e-15)
    assert X[1, 0] == pytest.approx(quad_x_power(1, 0, 1, 4.0), abs=1e-13)
    assert X[0, 0] == 0.0
    assert X.half_bandwidth == 1


def test_position_requires_two_functions():
    with pytest.raises(ContractError):
        position_matrix(BasisSpec(1.0, 1))
    with pytest.raises(ContractError):
        position_matrix(BasisSpec(1.0, 4, "even"))


@pytest.mark.parametrize("omega", [0.7, 1.0, 4.0])
def test_x_squared_diagonal(omega):
    X = position_matrix(BasisSpec(omega, 12))
    X2 = power_matrix(X, 2, 10)
    np.testing.assert_allclose(np.diag(X2.values), (2 * np.arange(10) + 1) / (2 * omega), rtol=1e-14)
    assert X2.half_bandwidth == 2


def test_power_one_is_identity_power():
    X = position_matrix(BasisSpec(2.0, 10))
    np.testing.assert_array_equal(power_matrix(X, 1, 9).values, X.values[:9, :9])


def test_x_six_ground_state():
    X = position_matrix(BasisSpec(4.0, 10))
    assert power_matrix(X, 6, 3)[0, 0] == pytest.approx(15 / 512, rel=1e-14)


def test_power_guard_enforced():
    X = position_matrix(BasisSpec(1.0, 10))
    with pytest.raises(ContractError):
        power_matrix(X, 4, 7)


@pytest.mark.parametrize("omega", [0.5, 1.0, 4.0, 7.3])
def test_quadrature_oracle(omega):
    size = 8
    X = position_matrix(BasisSpec(omega, size + 6))
    for k in range(1, 7):
        P = power_matrix(X, k, size)
        Q = np.array([[quad_x_power(m, n, k, omega) for n in range(size)] for m in range(size)])
        np.testing.assert_allclose(P.values, Q, atol=1e-9)
    T = kinetic_matrix(BasisSpec(omega, size))
    Q = np.array([[quad_kinetic(m, n, omega) for n in range(size)] for m in range(size)])
    np.testing.assert_allclose(T.values, Q, atol=1e-9)


def test_kinetic_examples():
    T = kinetic_matrix(BasisSpec(1.0, 4))
    assert T[0, 0] == 0.5
    assert T[1, 0] == 0.0
    T4 = kinetic_matrix(BasisSpec(4.0, 4))
    assert T4[2, 0] == pytest.approx(-2 * math.sqrt(2), rel=1e-15)
    assert T4.half_bandwidth == 2


@pytest.mark.parametrize("omega", [1.0, 2.5, 6.0, 10.0])
@pytest.mark.parametrize("size", [1, 2, 7, 50])
def test_kinetic_positive_definite(omega, size):
    assert np.linalg.eigvalsh(kinetic_matrix(BasisSpec(omega, size)).values).min() > 0


def test_parity_restrict_examples():
    I6 = BandedSymmetricMatrix(np.eye(6), 0)
    np.testing.assert_array_equal(parity_restrict(I6, "even", 3).values, np.eye(3))
    X = position_matrix(BasisSpec(1.0, 8))
    X2 = power_matrix(X, 2, 6)
    r = math.sqrt(2) / 2
    np.testing.assert_allclose(parity_restrict(X2, "even", 2).values, [[0.5, r], [r, 2.5]], rtol=1e-15)
    assert parity_restrict(X2, "odd", 3).half_bandwidth == 1
    with pytest.raises(ContractError):
        parity_restrict(X, "even", 3)
    with pytest.raises(ContractError):
        parity_restrict(X2, "even", 4)


@settings(max_examples=40, deadline=None)
@given(st.floats(0.3, 10.0), st.integers(1, 5), st.integers(1, 5), st.integers(2, 30))
def test_power_multiplicative(omega, j, k, size):
    X = position_matrix(BasisSpec(omega, size + 2 * (j + k)))
    lhs = power_matrix(X, j + k, size).values
    Xa = power_matrix(X, j, size + k).values
    Xb = power_matrix(X, k, size + k).values
    rhs = (Xa @ Xb)[:size, :size]
    np.testing.assert_allclose(lhs, rhs, rtol=1e-12, atol=1e-12 * np.abs(lhs).max())


@given(st.floats(0.3, 10.0), st.integers(1, 8), st.integers(3, 25))
def test_matrices_exactly_symmetric(omega, k, size):
    X = position_matrix(BasisSpec(omega, size + k))
    P = power_matrix(X, k, size).values
    assert np.array_equal(P, P.T)
    T = kinetic_matrix(BasisSpec(omega, size)).values
    assert np.array_equal(T, T.T)


@given(st.floats(0.2, 20.0), st.integers(0, 40))
def test_x_squared_scaling(omega, n):
    X1 = position_matrix(BasisSpec(1.0, n + 3))
    Xw = position_matrix(BasisSpec(omega, n + 3))
    assert power_matrix(Xw, 2, n + 1)[n, n] == pytest.approx(power_matrix(X1, 2, n + 1)[n, n] / omega, rel=1e-14)


def test_hermite_functions_orthonormal():
    x = np.linspace(-12, 12, 8001)
    f = hermite_functions(x, 1.7, 30)
    G = (f * (x[1] - x[0])) @ f.T
    np.testing.assert_allclose(G, np.eye(30), atol=1e-10)


def test_hermite_functions_represent_position():
    x = np.linspace(-10, 10, 8001)
    omega = 2.0
    f = hermite_functions(x, omega, 12)
    Xq = (f * x * (x[1] - x[0])) @ f.T
    X = position_matrix(BasisSpec(omega, 12))
    np.testing.assert_allclose(Xq, X.values, atol=1e-10)
