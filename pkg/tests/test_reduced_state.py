import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from gupent.model import NormalModes, OscillatorConfig, normal_modes
from gupent.reduced_state import (correction_polynomial, kernel_coefficients, kernel_eval,
                                  normalization_residual)
from gupent.wavefunctions import phi

from conftest import SQRT3, trapezoid_grid

freq = st.floats(0.5, 5.0)


def test_degenerate_coefficients():
    k = kernel_coefficients(NormalModes(1.0, 1.0))
    assert k.b == 0 and k.g2 == 0 and k.g3 == 0 and k.g5 == 0
    assert k.g1 == -2048.0
    assert abs(normalization_residual(k)) <= 1e-15


@given(freq, freq, st.floats(0.3, 3), st.floats(0.3, 3))
def test_a_plus_minus_b(w1, w2, m, hbar):
    k = kernel_coefficients(NormalModes(w1, w2), m, hbar)
    assert k.a + k.b == pytest.approx(m * (w1 + w2) / (4 * hbar), rel=1e-13)
    assert k.a - k.b == pytest.approx(m * w1 * w2 / (hbar * (w1 + w2)), rel=1e-13)
    assert k.a > k.b >= 0


@given(freq, freq, st.floats(0.3, 3), st.floats(0.3, 3))
def test_normalization_identity(w1, w2, m, hbar):
    assert abs(normalization_residual(kernel_coefficients(NormalModes(w1, w2), m, hbar))) <= 1e-12


def test_normalization_identity_coupled_example():
    assert abs(normalization_residual(kernel_coefficients(NormalModes(1.0, SQRT3)))) <= 1e-12


def test_sign_flip_breaks_identity():
    k = kernel_coefficients(NormalModes(1.0, SQRT3))
    from dataclasses import replace
    assert abs(normalization_residual(replace(k, g5=-k.g5))) > 1e-3


def test_kernel_symmetric(rng):
    k = kernel_coefficients(NormalModes(1.0, 2.2))
    x, xp = rng.normal(size=(2, 100))
    a, b = kernel_eval(x, xp, k), kernel_eval(xp, x, k)
    assert np.array_equal(a.c0, b.c0) and np.array_equal(a.c1, b.c1)


def test_kernel_pure_state_limit(line):
    k = kernel_coefficients(normal_modes(OscillatorConfig()))
    x = np.linspace(-3, 3, 13)
    r = kernel_eval(x[:, None], x[None, :], k)
    np.testing.assert_allclose(r.c0, np.outer(phi(0, x, 1.0), phi(0, x, 1.0)), rtol=1e-14)
    xs, w = line
    diag = kernel_eval(xs, xs, k)
    assert np.sum(w * diag.c0) == pytest.approx(1.0, abs=1e-12)
    # on the diagonal the first-order bracket integrates to zero
    assert abs(np.sum(w * diag.c0 * correction_polynomial(xs, xs, k))) <= 1e-9 * abs(k.g6)


@pytest.mark.parametrize("J", [0.5, 1.0, 5.0, 20.0])
def test_kernel_trace_is_one(J):
    k = kernel_coefficients(normal_modes(OscillatorConfig(J=J)))
    x, w = trapezoid_grid(8 / math.sqrt(k.a - k.b), 601)
    d = kernel_eval(x, x, k)
    assert np.sum(w * d.c0) == pytest.approx(1.0, abs=1e-8)
    assert abs(np.sum(w * d.c1)) <= 1e-8 * k.correction_scale * abs(k.g6)


def test_scalar_inputs_give_floats():
    v = kernel_eval(0.3, -0.2, kernel_coefficients(NormalModes(1.0, 2.0)))
    assert isinstance(v.c0, float) and isinstance(v.c1, float)
