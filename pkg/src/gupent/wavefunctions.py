"""Oscillator eigenfunctions and their first-order GUP corrections."""

from __future__ import annotations

import math

import numpy as np

from .model import OscillatorConfig, normal_modes
from .series import Series1


def hermite(n: int, z):
    """Physicists' Hermite polynomial by three-term recurrence."""
    if n < 0:
        raise ValueError("Hermite index must be nonnegative")
    z = np.asarray(z, dtype=float)
    h_prev, h = np.ones_like(z), 2 * z
    if n == 0:
        return h_prev if h_prev.ndim else float(h_prev)
    for k in range(1, n):
        h_prev, h = h, 2 * z * h - 2 * k * h_prev
    return h if h.ndim else float(h)


def phi(n: int, x, omega: float, m: float = 1.0, hbar: float = 1.0):
    """Normalized harmonic-oscillator eigenfunction; identically zero for ``n < 0``."""
    x = np.asarray(x, dtype=float)
    if n < 0:
        out = np.zeros_like(x)
        return out if out.ndim else 0.0
    k = m * omega / hbar
    norm = (k / math.pi) ** 0.25 / math.sqrt(2.0 ** n * math.factorial(n))
    out = norm * hermite(n, math.sqrt(k) * x) * np.exp(-0.5 * k * x * x)
    return out if np.ndim(out) else float(out)


def perturbed_state_coefficients(n: int) -> dict[int, float]:
    """Expansion of the first-order state correction in units of ``alpha_eff*m*hbar*omega``.

    Maps level ``k`` to the coefficient of ``phi_k``; levels below zero are
    omitted.
    """
    if n < 0:
        raise ValueError("level index must be nonnegative")
    coeffs = {
        n + 2: (2 * n + 3) * math.sqrt((n + 1) * (n + 2)) / 4,
        n - 2: -(2 * n - 1) * math.sqrt(max(n * (n - 1), 0)) / 4,
        n + 4: -math.sqrt((n + 1) * (n + 2) * (n + 3) * (n + 4)) / 16,
        n - 4: math.sqrt(max(n * (n - 1) * (n - 2) * (n - 3), 0)) / 16,
    }
    return {k: c for k, c in coeffs.items() if k >= 0}


def psi_perturbed(n: int, x, alpha_eff: float, omega: float,
                  m: float = 1.0, hbar: float = 1.0) -> Series1:
    """Eigenstate ``n`` of the quartic-momentum oscillator to first order.

    ``alpha_eff`` is the multiplier of the series variable in the quartic
    coupling: the one-oscillator problem uses ``1``, each normal mode of the
    coupled system uses ``1/2``.
    """
    scale = alpha_eff * m * hbar * omega
    c1 = sum(c * phi(k, x, omega, m, hbar)
             for k, c in perturbed_state_coefficients(n).items())
    return Series1(phi(n, x, omega, m, hbar), scale * c1)


def normal_coordinates(x1, x2):
    return (x1 + x2) / math.sqrt(2), (-x1 + x2) / math.sqrt(2)


def ground_wavefunction(x1, x2, config: OscillatorConfig) -> Series1:
    """Two-mode ground state, including the mode-coupling correction."""
    modes = normal_modes(config)
    w1, w2 = modes.omega1, modes.omega2
    m, hbar = config.m, config.hbar
    y1, y2 = normal_coordinates(np.asarray(x1, float), np.asarray(x2, float))

    def f(k, j):
        return (phi(k, y1, w1, m, hbar) * phi(j, y2, w2, m, hbar))

    c0 = f(0, 0)
    c1 = m * hbar * (
        3 * math.sqrt(2) / 8 * (w1 + w2) * (f(0, 2) + f(2, 0))
        - math.sqrt(6) / 16 * (w1 * f(4, 0) + w2 * f(0, 4))
        - 0.75 * w1 * w2 / (w1 + w2) * f(2, 2)
    )
    return Series1(c0, c1)
