"""Reduced density-matrix kernel of one oscillator in the coupled ground state.

To first order in ``alpha`` the kernel is a Gaussian times ``1 + alpha *
scale * P(x, x')`` where ``P`` is an even quartic polynomial with six
frequency-dependent coefficients ``g1..g6``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import NormalModes
from .series import Series1


@dataclass(frozen=True)
class KernelCoefficients:
    a: float
    b: float
    g1: float
    g2: float
    g3: float
    g4: float
    g5: float
    g6: float
    prefactor: float
    correction_scale: float

    @property
    def g(self) -> tuple[float, ...]:
        return (self.g1, self.g2, self.g3, self.g4, self.g5, self.g6)


def kernel_coefficients(modes: NormalModes, m: float = 1.0, hbar: float = 1.0) -> KernelCoefficients:
    w1, w2 = modes.omega1, modes.omega2
    sp = w1 + w2
    d2 = (w1 - w2) ** 2
    a = m * (w1 ** 2 + w2 ** 2 + 6 * w1 * w2) / (8 * hbar * sp)
    b = m * d2 / (8 * hbar * sp)

    # Polynomials kept in expanded form, term by term.
    g1 = -m ** 2 * (w1 ** 8 + 5 * w1 ** 7 * w2 + 94 * w1 ** 6 * w2 ** 2 + 459 * w1 ** 5 * w2 ** 3
                    + 930 * w1 ** 4 * w2 ** 4 + 459 * w1 ** 3 * w2 ** 5 + 94 * w1 ** 2 * w2 ** 6
                    + 5 * w1 * w2 ** 7 + w2 ** 8)
    g2 = 4 * m ** 2 * d2 * (w1 ** 6 + 7 * w1 ** 5 * w2 + 35 * w1 ** 4 * w2 ** 2 + 106 * w1 ** 3 * w2 ** 3
                            + 35 * w1 ** 2 * w2 ** 4 + 7 * w1 * w2 ** 5 + w2 ** 6)
    g3 = -6 * m ** 2 * d2 ** 2 * (w1 ** 4 + 9 * w1 ** 3 * w2 + 28 * w1 ** 2 * w2 ** 2
                                  + 9 * w1 * w2 ** 3 + w2 ** 4)
    g4 = 24 * hbar * m * sp * (2 * w1 ** 6 + 23 * w1 ** 5 * w2 + 82 * w1 ** 4 * w2 ** 2
                               + 170 * w1 ** 3 * w2 ** 3 + 82 * w1 ** 2 * w2 ** 4
                               + 23 * w1 * w2 ** 5 + 2 * w2 ** 6)
    g5 = -48 * hbar * m * sp * d2 * (2 * w1 ** 4 + 11 * w1 ** 3 * w2 + 30 * w1 ** 2 * w2 ** 2
                                     + 11 * w1 * w2 ** 3 + 2 * w2 ** 4)
    g6 = -48 * hbar ** 2 * sp ** 2 * (4 * w1 ** 4 + 17 * w1 ** 3 * w2 + 38 * w1 ** 2 * w2 ** 2
                                      + 17 * w1 * w2 ** 3 + 4 * w2 ** 4)

    prefactor = math.sqrt(2 * m * w1 * w2 / (math.pi * hbar * sp))
    correction_scale = m / (256 * hbar * sp ** 5)
    return KernelCoefficients(a, b, g1, g2, g3, g4, g5, g6, prefactor, correction_scale)


def correction_polynomial(x, xp, coeffs: KernelCoefficients):
    """The bracketed quartic ``P(x, x')`` multiplying the first-order term."""
    x = np.asarray(x, dtype=float)
    xp = np.asarray(xp, dtype=float)
    c = coeffs
    # symmetric groupings keep the value bit-identical under x <-> x'
    return (c.g1 * (x ** 4 + xp ** 4) + c.g2 * (x ** 3 * xp + x * xp ** 3)
            + c.g3 * (x * xp) ** 2 + c.g4 * (x * x + xp * xp) + c.g5 * (x * xp) + c.g6)


def kernel_eval(x, xp, coeffs: KernelCoefficients) -> Series1:
    """``rho_A[x, x']`` as a first-order series; broadcasts over array inputs."""
    x = np.asarray(x, dtype=float)
    xp = np.asarray(xp, dtype=float)
    c0 = coeffs.prefactor * np.exp(-coeffs.a * (x * x + xp * xp) + 2 * coeffs.b * (x * xp))
    c1 = c0 * coeffs.correction_scale * correction_polynomial(x, xp, coeffs)
    if c0.ndim == 0:
        return Series1(float(c0), float(c1))
    return Series1(c0, c1)


def normalization_residual(coeffs: KernelCoefficients) -> float:
    """Relative residual of the identity that makes the first-order trace vanish.

    The first-order part of ``Tr rho_A`` is proportional to
    ``3(2g1+2g2+g3)/(16(a-b)**2) + (2g4+g5)/(4(a-b)) + g6``; returned divided
    by ``|g6|``.
    """
    c = coeffs
    amb = c.a - c.b
    lhs = (3 * (2 * c.g1 + 2 * c.g2 + c.g3) / (16 * amb ** 2)
           + (2 * c.g4 + c.g5) / (4 * amb) + c.g6)
    return lhs / abs(c.g6)
