import math

import numpy as np
import pytest
from numpy.polynomial import hermite as H

from gupent.model import OscillatorConfig
from gupent.oracle import single_mode_state_numeric
from gupent.wavefunctions import (ground_wavefunction, hermite, perturbed_state_coefficients,
                                  phi, psi_perturbed)

from conftest import trapezoid_grid


@pytest.mark.parametrize("n, z, expected", [(0, 0.7, 1.0), (2, 1.0, 2.0), (4, 0.0, 12.0)])
def test_hermite_values(n, z, expected):
    assert hermite(n, z) == expected


def test_hermite_matches_numpy_series():
    z = np.linspace(-3, 3, 41)
    for n in range(9):
        np.testing.assert_allclose(hermite(n, z), H.hermval(z, [0] * n + [1]), rtol=1e-12, atol=1e-9)


def test_hermite_rejects_negative():
    with pytest.raises(ValueError):
        hermite(-1, 0.0)


def test_phi_values():
    assert phi(0, 0.0, 1.0) == pytest.approx(math.pi ** -0.25, rel=1e-15)
    assert phi(1, 0.0, 1.0) == 0.0
    assert phi(-2, 0.4, 1.0) == 0.0


@pytest.mark.parametrize("omega, m, hbar", [(1.0, 1.0, 1.0), (2.5, 0.7, 1.3)])
def test_orthonormality(omega, m, hbar):
    x, w = trapezoid_grid(10 * math.sqrt(hbar / (m * omega)), 801)
    basis = np.array([phi(n, x, omega, m, hbar) for n in range(9)])
    gram = (basis * w) @ basis.T
    np.testing.assert_allclose(gram, np.eye(9), atol=1e-8)


def test_parity():
    x = np.linspace(0.1, 4, 17)
    for n in range(9):
        assert np.array_equal(phi(n, -x, 1.3), (-1) ** n * phi(n, x, 1.3))


def test_psi0_uses_only_upward_levels(line):
    x, _ = line
    coeffs = perturbed_state_coefficients(0)
    assert set(coeffs) == {2, 4}
    assert coeffs[2] == pytest.approx(3 * math.sqrt(2) / 4, rel=1e-15)
    assert coeffs[4] == pytest.approx(-math.sqrt(24) / 16, rel=1e-15)
    psi = psi_perturbed(0, x, 1.0, 1.0)
    expected = 3 * math.sqrt(2) / 4 * phi(2, x, 1.0) - math.sqrt(24) / 16 * phi(4, x, 1.0)
    np.testing.assert_allclose(psi.c1, expected, atol=1e-15)
    assert np.array_equal(psi_perturbed(0, x, 0.0, 1.0).evaluate(0.0), phi(0, x, 1.0))


@pytest.mark.parametrize("n", range(5))
def test_first_order_norm_vanishes(n, line):
    x, w = line
    psi = psi_perturbed(n, x, 1.0, 1.0)
    assert abs(np.sum(w * 2 * psi.c0 * psi.c1)) <= 1e-7


@pytest.mark.parametrize("n", range(6))
@pytest.mark.parametrize("omega", [1.0, 1.7])
def test_state_correction_matches_number_basis(n, omega):
    # project the position-space correction on phi_k and compare with
    # <k|p^4|n>/(m (E_n - E_k)) from ladder-operator matrices
    x, w = trapezoid_grid(12 / math.sqrt(omega), 1201)
    c1 = psi_perturbed(n, x, 1.0, omega).c1
    proj = np.array([np.sum(w * c1 * phi(k, x, omega)) for k in range(14)])
    numeric = single_mode_state_numeric(n, 30, 1.0, omega)[:14]
    np.testing.assert_allclose(proj, numeric, atol=1e-9)


def test_ground_wavefunction_uncoupled_peak():
    assert ground_wavefunction(0.0, 0.0, OscillatorConfig()).c0 == pytest.approx(1 / math.sqrt(math.pi), rel=1e-15)


@pytest.mark.parametrize("J", [0.0, 1.0, 5.0])
def test_ground_wavefunction_norm(J):
    x, w = trapezoid_grid(10.0, 401)
    psi = ground_wavefunction(x[:, None], x[None, :], OscillatorConfig(J=J))
    W = np.outer(w, w)
    assert np.sum(W * psi.c0 ** 2) == pytest.approx(1.0, abs=1e-10)
    assert abs(np.sum(W * 2 * psi.c0 * psi.c1)) <= 1e-7


def test_ground_wavefunction_exchange_symmetry(rng):
    cfg = OscillatorConfig(J=2.3)
    p = rng.uniform(-2.5, 2.5, size=(50, 2))
    a = ground_wavefunction(p[:, 0], p[:, 1], cfg)
    b = ground_wavefunction(p[:, 1], p[:, 0], cfg)
    np.testing.assert_allclose(a.c0, b.c0, rtol=1e-12)
    np.testing.assert_allclose(a.c1, b.c1, rtol=1e-12, atol=1e-15)
