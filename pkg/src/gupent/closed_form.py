"""Closed forms for traces of powers of the reduced state and the entropies built on them.

Everything is expressed through ``s = sqrt(w2) + sqrt(w1)`` and
``w = |sqrt(w2) - sqrt(w1)|``, with ``Z(+-, l) = s**l +- w**l`` and
``w2 - w1 = s*w``.  Even powers of ``(w1 - w2)`` are rewritten as powers of
``s*w`` so that every formula stays finite when the frequencies coincide.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

from .model import NormalModes
from .reduced_state import kernel_coefficients
from .series import Series1


class DegeneratePowerError(ValueError):
    """A negative power of ``w`` was requested at ``w1 == w2``."""


class EntropyKind(str, enum.Enum):
    EXACT_INTEGER = "exact_integer"
    CONTINUATION = "continuation"
    EOF_LIMIT = "eof_limit"


@dataclass(frozen=True)
class EntropyResult:
    gamma: float
    value: Series1
    kind: EntropyKind


def _sign(sign) -> int:
    if sign in ("+", 1, +1.0):
        return 1
    if sign in ("-", -1, -1.0):
        return -1
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


def z(sign, ell: float, modes: NormalModes) -> float:
    """``(sqrt(w2)+sqrt(w1))**ell +- (sqrt(w2)-sqrt(w1))**ell``."""
    s, w = modes.s, modes.w
    if ell < 0 and w == 0:
        raise DegeneratePowerError(f"Z with exponent {ell} diverges at degenerate frequencies")
    return s ** ell + _sign(sign) * w ** ell


def det_g(n: int, a: float, b: float) -> float:
    """Determinant of the ``n x n`` cyclic tridiagonal matrix with ``2a`` on the
    diagonal and ``-b`` on the (periodically wrapped) off-diagonals."""
    if n < 1:
        raise ValueError("det_g needs n >= 1")
    if not a > abs(b):
        raise ValueError("det_g needs a > |b|")
    p, q = math.sqrt(a + b), math.sqrt(a - b)
    return 2.0 ** -n * ((p + q) ** n - (p - q) ** n) ** 2


def det_g_frequency(n: int, modes: NormalModes, m: float = 1.0, hbar: float = 1.0) -> float:
    """``det_g`` rewritten in terms of the mode frequencies."""
    return (m / (8 * hbar * (modes.omega1 + modes.omega2))) ** n * z("-", 2 * n, modes) ** 2


def det_h(n: int, modes: NormalModes, m: float = 1.0, hbar: float = 1.0) -> float:
    """Determinant of the open ``n x n`` tridiagonal matrix (``2a`` diagonal, ``-b`` off).

    Frequency form; valid for every ``n >= 0`` and gives ``1`` at ``n = 0``.
    """
    if n < 0:
        raise ValueError("det_h needs n >= 0")
    w1, w2 = modes.omega1, modes.omega2
    return ((m / (8 * hbar * (w1 + w2))) ** n * z("-", 4 * n + 4, modes)
            / (8 * (w1 + w2) * math.sqrt(w1 * w2)))


def det_h_ab(n: int, a: float, b: float) -> float:
    """``det_h`` from the cyclic determinants ``det_g(2n)`` and ``det_g(2n-2)``."""
    if n < 0:
        raise ValueError("det_h needs n >= 0")
    if n == 0:
        return 1.0
    p, q = math.sqrt(a + b), math.sqrt(a - b)

    # positive square root of det_g(k), which is 2**(-k/2) ((p+q)**k - (p-q)**k)
    def root_g(k):
        return 2.0 ** (-k / 2) * ((p + q) ** k - (p - q) ** k)

    return (a * root_g(2 * n) - b * b / 2 * root_g(2 * n - 2)) / math.sqrt(a * a - b * b)


class MomentIntegrals(NamedTuple):
    """Gaussian averages over ``exp(-X G_n X^T)``, each summed over the ring of ``n`` sites."""
    second: float          # sum x_i^2
    neighbor: float        # sum x_i x_{i+1}
    fourth: float          # sum x_i^4
    neighbor_square: float  # sum x_i^2 x_{i+1}^2
    neighbor_cubic: float  # sum x_i x_{i+1} (x_i^2 + x_{i+1}^2)


def moment_integrals(n: int, modes: NormalModes, m: float = 1.0, hbar: float = 1.0) -> MomentIntegrals:
    """Normalized moments (divided by the Gaussian integral itself) for ``n >= 3``.

    At ``n = 2`` the two neighbor pairs of the ring coincide, so the
    ring-sum forms do not apply.
    """
    if n < 3:
        raise ValueError("moment_integrals needs n >= 3")
    w1, w2 = modes.omega1, modes.omega2
    q = math.sqrt(w1 * w2)
    d2 = (modes.s * modes.w) ** 2
    zp2n = z("+", 2 * n, modes)
    zm2n = z("-", 2 * n, modes)
    zm4n4 = z("-", 4 * n - 4, modes)
    unit = hbar / (m * q)
    unit2 = hbar ** 2 / (m * m * w1 * w2)
    return MomentIntegrals(
        second=n * unit / 2 * zp2n / zm2n,
        neighbor=n * unit * d2 / 2 * z("+", 2 * n - 4, modes) / zm2n,
        fourth=3 * n * unit2 / 4 * (zp2n / zm2n) ** 2,
        neighbor_square=n * unit2 / (4 * zm2n ** 2) * (3 * zp2n ** 2 - 16 * (w1 + w2) * q * zm4n4),
        neighbor_cubic=(3 * n * unit2 * d2 / 2 * zp2n / zm2n ** 3
                        * (8 * (w1 + w2) * q * d2 ** (n - 2) + zm4n4)),
    )


def _j_terms(n: float, s: float, w: float) -> tuple[float, float, float, float, float]:
    zm2n = s ** (2 * n) - w ** (2 * n)
    return (
        zm2n * (s ** (2 * n + 4) + w ** (2 * n + 4)),
        zm2n * 2 * (s * w) ** 2 * (s ** (2 * n) + w ** (2 * n)),
        -zm2n * 2 * (s ** (2 * n - 2) * w ** 6 + s ** 6 * w ** (2 * n - 2)),
        -3 * s ** (2 * n) * w ** (2 * n) * (s ** 4 - w ** 4),
        -(s ** (4 * n - 4) * w ** 8 - s ** 8 * w ** (4 * n - 4)),
    )


def j_factor(n: float, modes: NormalModes) -> float:
    """Frequency polynomial governing the first-order correction to ``Tr rho_A**n``.

    Accepts real ``n``; it vanishes together with its ``n``-derivative at
    ``n = 1``.  Below ``n = 1`` it diverges at degenerate frequencies.
    """
    if not n > 0:
        raise ValueError("j_factor needs n > 0")
    s, w = modes.s, modes.w
    if w == 0 and n < 1:
        raise DegeneratePowerError("j_factor diverges at degenerate frequencies for n < 1")
    return math.fsum(_j_terms(n, s, w))


def _first_order_ratio(n: float, modes: NormalModes, m: float, hbar: float) -> float:
    """``c1/c0`` of ``Tr rho_A**n`` for real ``n > 0``."""
    s, w = modes.s, modes.w
    if w == 0:
        # every term carries a positive power of w through (w1 - w2)**4
        return 0.0
    w1, w2 = modes.omega1, modes.omega2
    zm2n = s ** (2 * n) - w ** (2 * n)
    return (-3 * n * m * hbar / 4096 * (s * w) ** 4 / (w1 * w2 * (w1 + w2) ** 5)
            * (s ** 4 - w ** 4) / zm2n ** 2 * j_factor(n, modes))


def _leading_trace(n: float, xi: float) -> float:
    if xi == 0:
        return 1.0
    return (1 - xi) ** n / (1 - xi ** n)


def trace_power(n: int, modes: NormalModes, m: float = 1.0, hbar: float = 1.0) -> Series1:
    """``Tr rho_A**n`` for integer ``n >= 2``."""
    if int(n) != n or n < 2:
        raise ValueError("trace_power needs an integer n >= 2")
    return trace_power_continued(int(n), modes, m, hbar)


def trace_power_continued(gamma: float, modes: NormalModes, m: float = 1.0, hbar: float = 1.0) -> Series1:
    """The integer-``n`` trace formula with ``n`` replaced by a real ``gamma > 0``.

    Only a conjectured stand-in for ``Tr rho_A**gamma`` when ``gamma`` is
    not an integer.
    """
    if not gamma > 0:
        raise ValueError("gamma must be positive")
    c0 = _leading_trace(gamma, modes.xi)
    return Series1(c0, c0 * _first_order_ratio(gamma, modes, m, hbar))


def trace_power_from_moments(n: int, modes: NormalModes, m: float = 1.0, hbar: float = 1.0) -> Series1:
    """``Tr rho_A**n`` assembled from the Gaussian moments and the kernel polynomial (``n >= 3``)."""
    k = kernel_coefficients(modes, m, hbar)
    mom = moment_integrals(n, modes, m, hbar)
    c0 = k.prefactor ** n * math.pi ** (n / 2) / math.sqrt(det_g(n, k.a, k.b))
    bracket = (2 * k.g1 * mom.fourth + k.g2 * mom.neighbor_cubic + k.g3 * mom.neighbor_square
               + 2 * k.g4 * mom.second + k.g5 * mom.neighbor + n * k.g6)
    return Series1(c0, c0 * k.correction_scale * bracket)


def purity(modes: NormalModes, m: float = 1.0, hbar: float = 1.0) -> Series1:
    w1, w2 = modes.omega1, modes.omega2
    c0 = 2 * math.sqrt(w1 * w2) / (w1 + w2)
    return Series1(c0, -c0 * 3 * m * hbar / 32 * (w1 - w2) ** 4 / (w1 + w2) ** 3)


def trace_cube(modes: NormalModes, m: float = 1.0, hbar: float = 1.0) -> Series1:
    """Explicit ``n = 3`` trace in rational form."""
    w1, w2 = modes.omega1, modes.omega2
    u, v = 3 * w1 + w2, w1 + 3 * w2
    c0 = 16 * w1 * w2 / (u * v)
    return Series1(c0, -c0 * 9 * m * hbar / 4 * (w1 + w2) * (w1 - w2) ** 4 / (u * u * v * v))


def renyi_leading(gamma: float, xi: float) -> float:
    """Order-``gamma`` Renyi entropy of the geometric spectrum ``(1-xi) xi**k``."""
    if xi == 0:
        return 0.0
    return (gamma * math.log1p(-xi) - math.log1p(-xi ** gamma)) / (1 - gamma)


def von_neumann_leading(xi: float) -> float:
    """Von Neumann entropy of the geometric spectrum ``(1-xi) xi**k``."""
    if xi == 0:
        return 0.0
    return -math.log1p(-xi) - xi / (1 - xi) * math.log(xi)


def renyi(gamma: float, modes: NormalModes, m: float = 1.0, hbar: float = 1.0) -> EntropyResult:
    """Renyi entanglement entropy of order ``gamma``.

    Integer ``gamma >= 2`` is exact to first order; any other order uses the
    real-``gamma`` continuation of the trace formula and is labelled so.
    """
    if not gamma > 0:
        raise ValueError("Renyi order must be positive")
    if gamma == 1:
        raise ValueError("gamma = 1 is the von Neumann limit; use eof()")
    exact = float(gamma).is_integer() and gamma >= 2
    c1 = _first_order_ratio(gamma, modes, m, hbar) / (1 - gamma)
    kind = EntropyKind.EXACT_INTEGER if exact else EntropyKind.CONTINUATION
    return EntropyResult(float(gamma), Series1(renyi_leading(gamma, modes.xi), c1), kind)


def eof(modes: NormalModes, m: float = 1.0, hbar: float = 1.0) -> EntropyResult:
    """Entanglement of formation; its first-order coefficient is identically zero."""
    return EntropyResult(1.0, Series1(von_neumann_leading(modes.xi), 0.0), EntropyKind.EOF_LIMIT)


def entropy(gamma: float, modes: NormalModes, m: float = 1.0, hbar: float = 1.0) -> EntropyResult:
    """``renyi`` for ``gamma != 1`` and ``eof`` at ``gamma == 1``."""
    if gamma == 1:
        return eof(modes, m, hbar)
    return renyi(gamma, modes, m, hbar)
