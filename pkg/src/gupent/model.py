"""Physical parameters, normal modes and oscillator energies.

The two oscillators share a mass ``m`` and spring constant ``k0`` and are
coupled by ``J/2 (x1 - x2)**2``.  In GUP-corrected quantum mechanics each
momentum is replaced by ``p (1 + alpha p**2)``; to first order in ``alpha``
the normal-mode Hamiltonian gains a quartic term ``alpha/(2m) pi_j**4`` per
mode and a mode coupling ``3 alpha/m pi_1**2 pi_2**2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .series import Series1


@dataclass(frozen=True)
class OscillatorConfig:
    m: float = 1.0
    k0: float = 1.0
    J: float = 0.0
    hbar: float = 1.0
    alpha: float = 0.0

    def __post_init__(self):
        if not self.m > 0:
            raise ValueError(f"mass must be positive, got {self.m}")
        if not self.k0 > 0:
            raise ValueError(f"k0 must be positive, got {self.k0}")
        if not self.hbar > 0:
            raise ValueError(f"hbar must be positive, got {self.hbar}")
        if not self.J >= 0:
            raise ValueError(f"coupling J must be nonnegative, got {self.J}")
        if not self.alpha >= 0:
            raise ValueError(f"GUP parameter must be nonnegative, got {self.alpha}")
        if not self.k0 + 2 * self.J > 0:
            raise ValueError("k0 + 2J must be positive")


@dataclass(frozen=True)
class NormalModes:
    omega1: float
    omega2: float

    def __post_init__(self):
        if not (self.omega1 > 0 and self.omega2 > 0):
            raise ValueError("normal-mode frequencies must be positive")

    @property
    def s(self) -> float:
        """``sqrt(omega2) + sqrt(omega1)``."""
        return math.sqrt(self.omega2) + math.sqrt(self.omega1)

    @property
    def w(self) -> float:
        """``|sqrt(omega2) - sqrt(omega1)|``; zero exactly at degeneracy."""
        return abs(math.sqrt(self.omega2) - math.sqrt(self.omega1))

    @property
    def xi(self) -> float:
        return (self.w / self.s) ** 2


def normal_modes(config: OscillatorConfig) -> NormalModes:
    return NormalModes(
        math.sqrt(config.k0 / config.m),
        math.sqrt((config.k0 + 2 * config.J) / config.m),
    )


def minimal_length(alpha: float, hbar: float = 1.0) -> float:
    """Smallest position uncertainty allowed by the GUP, ``hbar*sqrt(3 alpha)``."""
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    return hbar * math.sqrt(3 * alpha)


def single_mode_energy(n: int, alpha_eff: float, omega: float,
                       m: float = 1.0, hbar: float = 1.0) -> float:
    """Level ``n`` of ``p**2/2m + (alpha_eff/m) p**4 + m omega**2 x**2/2``, first order."""
    if n < 0:
        raise ValueError("level index must be nonnegative")
    shift = 3 * (2 * n * n + 2 * n + 1) / (2 * (2 * n + 1)) * (alpha_eff * m * hbar * omega)
    return (n + 0.5) * hbar * omega * (1 + shift)


def ground_energy(config: OscillatorConfig) -> Series1:
    modes = normal_modes(config)
    w1, w2 = modes.omega1, modes.omega2
    m, hbar = config.m, config.hbar
    return Series1(hbar * (w1 + w2) / 2, 3 / 8 * m * hbar ** 2 * (w1 + w2) ** 2)
