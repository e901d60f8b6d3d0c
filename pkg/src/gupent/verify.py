"""Self-check suite run by ``gupent verify``.

Each check recomputes a closed form through an independent route and
reports the worst relative deviation against its tolerance.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import closed_form, oracle, reduced_state, reports
from .model import OscillatorConfig, ground_energy, normal_modes, NormalModes, single_mode_energy


@dataclass(frozen=True)
class Check:
    name: str
    run: Callable[[], tuple[bool, str]]
    fast: bool = True


def _rel(x, y) -> float:
    x, y = np.asarray(x, float), np.asarray(y, float)
    return float(np.max(np.abs(x - y) / np.maximum(np.abs(y), 1e-300)))


def _modes(J: float) -> NormalModes:
    return normal_modes(OscillatorConfig(J=J))


def check_normalization() -> tuple[bool, str]:
    grid = np.linspace(0.3, 5.0, 20)
    worst = max(abs(reduced_state.normalization_residual(
        reduced_state.kernel_coefficients(NormalModes(w1, w2)))) for w1 in grid for w2 in grid)
    return worst <= 1e-12, f"max residual {worst:.2e} (tol 1e-12)"


def check_partial_trace() -> tuple[bool, str]:
    worst0 = worst1 = 0.0
    for J in (0.5, 1.0, 5.0):
        cfg = OscillatorConfig(J=J)
        coeffs = reduced_state.kernel_coefficients(normal_modes(cfg))
        grid = oracle.GridSpec(2.5, 64)
        x, rho = oracle.partial_trace_numeric(cfg, grid)
        idx = np.linspace(4, 59, 5).astype(int)
        I, K = np.meshgrid(idx, idx, indexing="ij")
        ref = reduced_state.kernel_eval(x[I], x[K], coeffs)
        worst0 = max(worst0, _rel(rho.c0[I, K], ref.c0))
        worst1 = max(worst1, _rel(rho.c1[I, K], ref.c1))
    ok = worst0 <= 1e-5 and worst1 <= 1e-4
    return ok, f"c0 {worst0:.1e} (tol 1e-5), c1 {worst1:.1e} (tol 1e-4)"


def check_trace_powers() -> tuple[bool, str]:
    worst0 = worst1 = 0.0
    for J in (0.5, 1.0, 5.0, 20.0):
        modes = _modes(J)
        coeffs = reduced_state.kernel_coefficients(modes)
        dk = oracle.discretize(coeffs, oracle.GridSpec.for_kernel(coeffs))
        for n in range(2, 7):
            num = oracle.trace_power_numeric(n, dk)
            ref = closed_form.trace_power(n, modes)
            worst0 = max(worst0, _rel(num.c0, ref.c0))
            worst1 = max(worst1, _rel(num.c1, ref.c1))
        ident = max(_rel(closed_form.trace_power(2, modes).c1, closed_form.purity(modes).c1),
                    _rel(closed_form.trace_power(3, modes).c1, closed_form.trace_cube(modes).c1))
        worst1 = max(worst1, ident)
    ok = worst0 <= 1e-6 and worst1 <= 1e-4
    return ok, f"c0 {worst0:.1e} (tol 1e-6), c1 {worst1:.1e} (tol 1e-4)"


def check_determinants() -> tuple[bool, str]:
    worst = 0.0
    for J in (0.5, 1.0, 5.0, 20.0):
        modes = _modes(J)
        k = reduced_state.kernel_coefficients(modes)
        for n in range(1, 9):
            dense = oracle.det_dense(oracle.cyclic_matrix(n, k.a, k.b))
            worst = max(worst, _rel(closed_form.det_g(n, k.a, k.b), dense),
                        _rel(closed_form.det_g_frequency(n, modes), dense))
        for n in range(0, 9):
            worst = max(worst, _rel(closed_form.det_h(n, modes),
                                    oracle.det_tridiagonal_recurrence(n, k.a, k.b)),
                        _rel(closed_form.det_h(n, modes), oracle.det_dense(oracle.tridiagonal_matrix(n, k.a, k.b))))
        worst = max(worst, abs(closed_form.det_h(0, modes) - 1))
    return worst <= 1e-10, f"max deviation {worst:.1e} (tol 1e-10)"


def check_moments() -> tuple[bool, str]:
    out = []
    ok = True
    for n, tol in ((3, 1e-7), (4, 1e-5)):
        worst = 0.0
        for J in (1.0, 5.0):
            modes = _modes(J)
            k = reduced_state.kernel_coefficients(modes)
            worst = max(worst, _rel(oracle.gaussian_moments_numeric(n, k.a, k.b),
                                    closed_form.moment_integrals(n, modes)))
        ok &= worst <= tol
        out.append(f"n={n} {worst:.1e} (tol {tol:g})")
    return ok, ", ".join(out)


def check_eof_first_order() -> tuple[bool, str]:
    worst = 0.0
    for w1, w2 in itertools.product(np.linspace(0.3, 5.0, 8), repeat=2):
        if w1 == w2:
            continue
        modes = NormalModes(w1, w2)
        j1, dj1 = oracle.j_derivative_numeric(modes)
        worst = max(worst, abs(j1) / modes.s ** 8, abs(dj1) / modes.s ** 8)
    modes = _modes(1.0)
    c1 = [abs(closed_form.renyi(1 + sgn * 10.0 ** -k, modes).value.c1)
          for k in (1, 2, 3) for sgn in (1, -1)]
    # each decade in |gamma - 1| shrinks c1 roughly tenfold
    ratios = [c1[i] / c1[i + 2] for i in range(4)]
    linear = all(6 < r < 16 for r in ratios)
    return worst <= 1e-6 and linear, f"scaled J1/dJ1 {worst:.1e} (tol 1e-6), decade ratios {min(ratios):.1f}..{max(ratios):.1f}"


def _non_increasing(row, tol=0.0) -> bool:
    return all(b <= a + tol for a, b in zip(row, row[1:]))


def check_figures() -> tuple[bool, str]:
    bad = []
    for fig, decreasing in (("1", True), ("2", False), ("3a", True), ("3b", True)):
        t = reports.figure_table(fig)
        for row in t.rows:
            vals = row[1:]
            if not decreasing:
                vals = [-v for v in vals]
            if not _non_increasing(vals):
                bad.append(f"fig {fig} J={row[0]}")
    return not bad, "all rows monotone in alpha" if not bad else "non-monotone: " + ", ".join(bad[:5])


def check_spectrum() -> tuple[bool, str]:
    worst_l = worst_s = 0.0
    for J in (1.0, 5.0, 20.0):
        modes = _modes(J)
        xi = modes.xi
        coeffs = reduced_state.kernel_coefficients(modes)
        lam = oracle.spectrum_numeric(oracle.discretize(coeffs, oracle.GridSpec.for_kernel(coeffs)))
        k = np.arange(6)
        worst_l = max(worst_l, _rel(lam[:6], (1 - xi) * xi ** k))
        worst_s = max(worst_s, abs(oracle.von_neumann_from_spectrum(lam) - closed_form.von_neumann_leading(xi)))
        for g in (0.7, 2.0, 3.0):
            worst_s = max(worst_s, abs(oracle.renyi_from_spectrum(lam, g) - closed_form.renyi_leading(g, xi)))
    ok = worst_l <= 1e-6 and worst_s <= 1e-8
    return ok, f"eigenvalues {worst_l:.1e} (tol 1e-6), entropies {worst_s:.1e} (tol 1e-8)"


def check_ground_energy() -> tuple[bool, str]:
    worst = 0.0
    for J in (0.0, 1.0, 5.0):
        cfg = OscillatorConfig(J=J)
        modes = normal_modes(cfg)
        ref = ground_energy(cfg).c1
        decomposed = sum(single_mode_energy(0, 0.5, w) - single_mode_energy(0, 0.0, w)
                         for w in (modes.omega1, modes.omega2)) + 0.75 * modes.omega1 * modes.omega2
        worst = max(worst, _rel(decomposed, ref), _rel(oracle.ground_energy_numeric(cfg).c1, ref))
    return worst <= 1e-10, f"max deviation {worst:.1e} (tol 1e-10)"


def check_degeneracy() -> tuple[bool, str]:
    near, at = _modes(1e-6), _modes(0.0)
    diffs = []
    for n in range(2, 7):
        a, b = closed_form.trace_power(n, near), closed_form.trace_power(n, at)
        diffs += [abs(a.c0 - b.c0), abs(a.c1 - b.c1)]
    for g in (0.7, 2.0, 3.0):
        a, b = closed_form.renyi(g, near).value, closed_form.renyi(g, at).value
        diffs += [abs(a.c0 - b.c0), abs(a.c1 - b.c1)]
    diffs.append(abs(closed_form.eof(near).value.c0 - closed_form.eof(at).value.c0))
    worst = max(diffs)
    return worst <= 1e-6, f"max jump {worst:.1e} (tol 1e-6)"


def check_direct_trace() -> tuple[bool, str]:
    modes = _modes(1.0)
    coeffs = reduced_state.kernel_coefficients(modes)
    grid = oracle.GridSpec.for_kernel(coeffs, points=160)
    d3 = oracle.quad_trace_direct(3, coeffs, grid)
    ref = closed_form.trace_cube(modes)
    worst = max(_rel(d3.c0, ref.c0), _rel(d3.c1, ref.c1))
    return worst <= 1e-5, f"max deviation {worst:.1e} (tol 1e-5)"


CHECKS = [
    Check("normalization identity", check_normalization),
    Check("partial trace vs kernel", check_partial_trace),
    Check("trace powers vs grid", check_trace_powers),
    Check("determinants", check_determinants),
    Check("gaussian moments", check_moments),
    Check("eof first-order vanishing", check_eof_first_order),
    Check("figure monotonicity", check_figures),
    Check("spectrum oracle", check_spectrum),
    Check("ground energy", check_ground_energy),
    Check("degeneracy limit", check_degeneracy),
    Check("direct triple quadrature", check_direct_trace, fast=False),
]


def run_checks(fast: bool = False, echo=print) -> bool:
    ok_all = True
    start = time.perf_counter()
    for check in CHECKS:
        if fast and not check.fast:
            continue
        try:
            ok, detail = check.run()
        except Exception as exc:  # a crashing check is a failing check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        ok_all &= ok
        echo(f"{'PASS' if ok else 'FAIL'}  {check.name}: {detail}")
    echo(f"{'all checks passed' if ok_all else 'verification FAILED'} "
         f"in {time.perf_counter() - start:.1f} s")
    return ok_all
