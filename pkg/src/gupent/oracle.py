"""Independent numerical checks of the closed forms.

Nothing here uses the trace, moment or determinant formulas of
``closed_form``; every quantity is recomputed from the kernel, the
wavefunctions or the number basis by plain linear algebra and quadrature.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .closed_form import MomentIntegrals, j_factor
from .model import NormalModes, OscillatorConfig, normal_modes
from .reduced_state import KernelCoefficients, kernel_eval
from .series import Series1
from .wavefunctions import ground_wavefunction


class ResolutionError(RuntimeError):
    """The quadrature grid does not resolve the kernel."""


@dataclass(frozen=True)
class GridSpec:
    half_width: float
    points: int = 400
    rule: str = "trapezoid"

    def __post_init__(self):
        if not self.half_width > 0:
            raise ValueError("grid half-width must be positive")
        if self.points < 64:
            raise ValueError("grid needs at least 64 points")
        if self.rule not in ("trapezoid", "gauss-legendre"):
            raise ValueError(f"unknown quadrature rule {self.rule!r}")

    @classmethod
    def for_kernel(cls, coeffs: KernelCoefficients, points: int = 400,
                   rule: str = "trapezoid") -> "GridSpec":
        # a - b is the slowest Gaussian decay rate of the kernel
        return cls(8 / math.sqrt(coeffs.a - coeffs.b), points, rule)

    def nodes_weights(self) -> tuple[np.ndarray, np.ndarray]:
        L, n = self.half_width, self.points
        if self.rule == "trapezoid":
            x = np.linspace(-L, L, n)
            w = np.full(n, x[1] - x[0])
            w[0] = w[-1] = 0.5 * (x[1] - x[0])
            return x, w
        t, w = np.polynomial.legendre.leggauss(n)
        return L * t, L * w


@dataclass(frozen=True)
class DiscretizedKernel:
    K0: np.ndarray
    K1: np.ndarray
    weights: np.ndarray
    nodes: np.ndarray

    def symmetrized(self) -> tuple[np.ndarray, np.ndarray]:
        """``D^1/2 K D^1/2`` for both orders, ``D`` the weight diagonal."""
        r = np.sqrt(self.weights)
        outer = np.outer(r, r)
        return self.K0 * outer, self.K1 * outer


def discretize(coeffs: KernelCoefficients, grid: GridSpec, tol: float = 1e-8) -> DiscretizedKernel:
    x, w = grid.nodes_weights()
    k = kernel_eval(x[:, None], x[None, :], coeffs)
    K0 = 0.5 * (k.c0 + k.c0.T)
    K1 = 0.5 * (k.c1 + k.c1.T)
    trace = float(np.dot(np.diag(K0), w))
    if abs(trace - 1) > tol:
        raise ResolutionError(f"weighted kernel trace {trace!r} deviates from 1 by more than {tol}")
    return DiscretizedKernel(K0, K1, w, x)


def trace_power_numeric(n: int, dk: DiscretizedKernel) -> Series1:
    """``tr (K0 + alpha K1)**n`` to first order, using cyclicity for the ``alpha`` term."""
    if n < 2:
        raise ValueError("trace_power_numeric needs n >= 2")
    A0, A1 = dk.symmetrized()
    P = np.linalg.matrix_power(A0, n - 1)
    return Series1(float(np.sum(P * A0.T)), float(n * np.sum(P * A1.T)))


def spectrum_numeric(dk: DiscretizedKernel) -> np.ndarray:
    """Eigenvalues of the zeroth-order kernel operator, descending."""
    A0, _ = dk.symmetrized()
    return np.linalg.eigvalsh(A0)[::-1]


def renyi_from_spectrum(eigenvalues, gamma: float) -> float:
    lam = np.asarray(eigenvalues)
    lam = lam[lam > 0]
    return float(np.log(np.sum(lam ** gamma)) / (1 - gamma))


def von_neumann_from_spectrum(eigenvalues) -> float:
    lam = np.asarray(eigenvalues)
    lam = lam[lam > 0]
    return float(-np.sum(lam * np.log(lam)))


def quad_trace_direct(n: int, coeffs: KernelCoefficients, grid: GridSpec) -> Series1:
    """``Tr rho_A**n`` for ``n`` in ``{2, 3}`` by summing the ring product over the full tensor grid."""
    if n not in (2, 3):
        raise ValueError("quad_trace_direct supports n = 2 or 3")
    x, w = grid.nodes_weights()
    k = kernel_eval(x[:, None], x[None, :], coeffs)
    R0, R1 = k.c0, k.c1
    if n == 2:
        # sum_ij w_i w_j rho(x_i, x_j) rho(x_j, x_i)
        W = np.outer(w, w)
        c0 = np.sum(W * R0 * R0.T)
        c1 = np.sum(W * (R1 * R0.T + R0 * R1.T))
        return Series1(float(c0), float(c1))
    c0 = c1 = 0.0
    W = np.outer(w, w)
    for i in range(len(x)):
        # slab i of sum_ijk w_i w_j w_k rho_ij rho_jk rho_ki
        a0, a1 = R0[i][:, None], R1[i][:, None]
        b0, b1 = R0[:, i][None, :], R1[:, i][None, :]
        c0 += w[i] * np.sum(W * a0 * R0 * b0)
        c1 += w[i] * np.sum(W * (a1 * R0 * b0 + a0 * R1 * b0 + a0 * R0 * b1))
    return Series1(float(c0), float(c1))


def partial_trace_numeric(config: OscillatorConfig, grid: GridSpec,
                          inner_points: int = 801) -> tuple[np.ndarray, Series1]:
    """Trace the second oscillator out of the two-mode ground state by quadrature.

    Returns the grid nodes and the reduced kernel sampled at every node pair.
    """
    x, _ = grid.nodes_weights()
    modes = normal_modes(config)
    w_min = min(modes.omega1, modes.omega2)
    L2 = 10 * math.sqrt(config.hbar / (config.m * w_min)) + float(np.max(np.abs(x)))
    x2 = np.linspace(-L2, L2, inner_points)
    dx2 = x2[1] - x2[0]
    psi = ground_wavefunction(x[:, None], x2[None, :], config)
    rho0 = psi.c0 @ psi.c0.T * dx2
    rho1 = (psi.c0 @ psi.c1.T + psi.c1 @ psi.c0.T) * dx2
    return x, Series1(rho0, rho1)


def _ladder_matrices(levels: int) -> tuple[np.ndarray, np.ndarray]:
    lower = np.diag(np.sqrt(np.arange(1, levels, dtype=float)), k=1)
    return lower, lower.T


def _momentum_powers(levels: int, omega: float, m: float, hbar: float) -> tuple[np.ndarray, np.ndarray]:
    """Number-basis matrices of ``p**2`` and ``p**4`` (both real)."""
    a, ad = _ladder_matrices(levels)
    A = ad - a  # p = i sqrt(m hbar omega / 2) A
    unit = m * hbar * omega / 2
    A2 = A @ A
    return -unit * A2, unit * unit * (A2 @ A2)


def single_mode_spectrum(levels: int, alpha_eff: float, omega: float, m: float = 1.0,
                         hbar: float = 1.0, n_max: int | None = None) -> list[Series1]:
    """First-order levels of ``p**2/2m + (alpha*alpha_eff/m) p**4 + m omega**2 x**2/2``.

    Built from truncated ladder-operator matrices; rows far enough from the
    truncation edge are exact.
    """
    if levels < 20:
        raise ValueError("single_mode_spectrum needs at least 20 basis levels")
    if n_max is None:
        n_max = levels - 5
    if n_max > levels - 5:
        warnings.warn(f"levels above {levels - 5} are affected by basis truncation", RuntimeWarning)
    a, ad = _ladder_matrices(levels)
    P2, P4 = _momentum_powers(levels, omega, m, hbar)
    X2 = hbar / (2 * m * omega) * (a + ad) @ (a + ad)
    H0 = P2 / (2 * m) + 0.5 * m * omega ** 2 * X2
    e0 = np.diag(H0)
    e1 = alpha_eff * np.diag(P4) / m
    return [Series1(float(e0[k]), float(e1[k])) for k in range(n_max + 1)]


def single_mode_state_numeric(n: int, levels: int, alpha_eff: float, omega: float,
                              m: float = 1.0, hbar: float = 1.0) -> np.ndarray:
    """Number-basis components of the first-order state correction of level ``n``."""
    _, P4 = _momentum_powers(levels, omega, m, hbar)
    V = alpha_eff * P4 / m
    out = np.zeros(levels)
    for k in range(levels):
        if k != n:
            out[k] = V[k, n] / ((n - k) * hbar * omega)
    return out


def ground_energy_numeric(config: OscillatorConfig, levels: int = 24) -> Series1:
    """Two-mode ground energy from number-basis matrix elements of every perturbing term."""
    modes = normal_modes(config)
    m, hbar = config.m, config.hbar
    total = Series1(0.0, 0.0)
    p2 = []
    for omega in (modes.omega1, modes.omega2):
        total = total + single_mode_spectrum(levels, 0.5, omega, m, hbar, n_max=0)[0]
        p2.append(_momentum_powers(levels, omega, m, hbar)[0][0, 0])
    return total + Series1(0.0, 3 / m * p2[0] * p2[1])


def cyclic_matrix(n: int, a: float, b: float) -> np.ndarray:
    """``2a`` on the diagonal, ``-b`` between ring neighbors (wrapping entries add up)."""
    G = 2 * a * np.eye(n)
    for i in range(n):
        G[i, (i + 1) % n] -= b
        G[(i + 1) % n, i] -= b
    return G


def tridiagonal_matrix(n: int, a: float, b: float) -> np.ndarray:
    return 2 * a * np.eye(n) - b * (np.eye(n, k=1) + np.eye(n, k=-1))


def det_dense(M: np.ndarray) -> float:
    if M.shape == (0, 0):
        return 1.0
    return float(np.linalg.det(M))


def det_tridiagonal_recurrence(n: int, a: float, b: float) -> float:
    prev, cur = 0.0, 1.0
    for _ in range(n):
        prev, cur = cur, 2 * a * cur - b * b * prev
    return cur


def gaussian_moments_numeric(n: int, a: float, b: float, points: int | None = None) -> MomentIntegrals:
    """Ring moments of ``exp(-X G_n X^T)`` by ``n``-dimensional tensor trapezoid quadrature."""
    G = cyclic_matrix(n, a, b)
    lam = np.linalg.eigvalsh(G)
    L = 7.5 / math.sqrt(lam[0])
    if points is None:
        # spacing well below the fastest Gaussian width
        points = int(math.ceil(2 * L * math.sqrt(lam[-1]) / 0.45)) + 1
    x = np.linspace(-L, L, points)
    X = np.meshgrid(*([x] * n), indexing="ij", sparse=True)
    quad = sum(G[i, j] * X[i] * X[j] for i in range(n) for j in range(n))
    weight = np.exp(-quad)
    norm = np.sum(weight)

    def avg(f):
        return float(np.sum(weight * f) / norm)

    nxt = [X[(i + 1) % n] for i in range(n)]
    return MomentIntegrals(
        second=avg(sum(X[i] ** 2 for i in range(n))),
        neighbor=avg(sum(X[i] * nxt[i] for i in range(n))),
        fourth=avg(sum(X[i] ** 4 for i in range(n))),
        neighbor_square=avg(sum(X[i] ** 2 * nxt[i] ** 2 for i in range(n))),
        neighbor_cubic=avg(sum(X[i] * nxt[i] * (X[i] ** 2 + nxt[i] ** 2) for i in range(n))),
    )


def j_derivative_numeric(modes: NormalModes, h: float = 1e-5) -> tuple[float, float]:
    """``j_factor`` at ``n = 1`` and its central-difference ``n``-derivative there."""
    # truncation error is h**2 * J'''/6; 1e-5 sits well above the roundoff floor
    return j_factor(1, modes), (j_factor(1 + h, modes) - j_factor(1 - h, modes)) / (2 * h)
