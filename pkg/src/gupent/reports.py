"""Tabulated figure data, parameter sweeps and their CSV serialization."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from . import closed_form
from .model import OscillatorConfig, ground_energy, normal_modes
from .series import Series1

QUANTITIES = ("purity", "renyi", "eof", "trace_power", "energy")
FIGURES = ("1", "2", "3a", "3b")

FIGURE_ALPHAS = (0.0, 0.2, 0.4)
FIGURE_J = tuple(0.5 * i for i in range(101))
FIGURE_3B_J = (10.0, 20.0, 30.0)
FIGURE_3B_ALPHAS = tuple(round(0.01 * i, 2) for i in range(51))

# first-order truncation is flagged beyond this relative correction
STRAIN_LIMIT = 0.1


@dataclass
class Table:
    header: list[str]
    rows: list[list[float]]
    params: dict[str, object] = field(default_factory=dict)
    title: str = ""
    xlabel: str = ""
    ylabel: str = ""
    strained: int = 0

    def column(self, name: str) -> list[float]:
        i = self.header.index(name)
        return [r[i] for r in self.rows]


def _format(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


def to_csv(table: Table) -> str:
    buf = io.StringIO()
    params = " ".join(f"{k}={_format(v)}" for k, v in table.params.items())
    buf.write(f"# params: {params}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table.header)
    for row in table.rows:
        writer.writerow([_format(v) for v in row])
    return buf.getvalue()


def write_csv(table: Table, path: Path, force: bool = False) -> None:
    path = Path(path)
    if path.exists() and not force:
        raise FileExistsError(f"{path} exists; pass --force to overwrite")
    path.write_text(to_csv(table), encoding="utf-8")


def quantity_series(quantity: str, config: OscillatorConfig, gamma: float | None = None,
                    n: int | None = None) -> Series1:
    """Series for one named quantity at one coupling."""
    modes = normal_modes(config)
    m, hbar = config.m, config.hbar
    if quantity == "purity":
        return closed_form.purity(modes, m, hbar)
    if quantity == "renyi":
        if gamma is None:
            raise ValueError("renyi needs gamma")
        return closed_form.entropy(gamma, modes, m, hbar).value
    if quantity == "eof":
        return closed_form.eof(modes, m, hbar).value
    if quantity == "trace_power":
        if n is None:
            raise ValueError("trace_power needs n")
        return closed_form.trace_power(n, modes, m, hbar)
    if quantity == "energy":
        return ground_energy(config)
    raise ValueError(f"unknown quantity {quantity!r}; choose from {', '.join(QUANTITIES)}")


def is_strained(series: Series1, alpha: float) -> bool:
    if series.c0 == 0:
        return False
    return alpha * abs(series.c1 / series.c0) > STRAIN_LIMIT


def _grid_table(quantity: str, j_values: Sequence[float], alphas: Sequence[float],
                k0: float, m: float, hbar: float, gamma: float | None = None) -> Table:
    rows = []
    strained = 0
    for J in j_values:
        s = quantity_series(quantity, OscillatorConfig(m=m, k0=k0, J=J, hbar=hbar), gamma=gamma)
        rows.append([J] + [s.evaluate(a) for a in alphas])
        strained += sum(is_strained(s, a) for a in alphas)
    header = ["J"] + [f"alpha={a:g}" for a in alphas]
    return Table(header, rows, {"k0": k0, "m": m, "hbar": hbar}, strained=strained)


def figure_table(fig: str, k0: float = 1.0, m: float = 1.0, hbar: float = 1.0) -> Table:
    """Data behind one of the published curves (purity, order-2 and order-0.7 entropies)."""
    if fig == "1":
        t = _grid_table("purity", FIGURE_J, FIGURE_ALPHAS, k0, m, hbar)
        t.title, t.ylabel = "Purity of the reduced state", "purity"
    elif fig == "2":
        t = _grid_table("renyi", FIGURE_J, FIGURE_ALPHAS, k0, m, hbar, gamma=2.0)
        t.title, t.ylabel = "Renyi entropy, order 2", "entropy"
    elif fig == "3a":
        t = _grid_table("renyi", FIGURE_J, FIGURE_ALPHAS, k0, m, hbar, gamma=0.7)
        t.title, t.ylabel = "Renyi entropy, order 0.7 (continued)", "entropy"
    elif fig == "3b":
        t = _grid_table("renyi", FIGURE_3B_J, FIGURE_3B_ALPHAS, k0, m, hbar, gamma=0.7)
        t.title, t.ylabel = "Renyi entropy, order 0.7 (continued)", "entropy"
    else:
        raise ValueError(f"unknown figure {fig!r}; choose from {', '.join(FIGURES)}")
    t.params["figure"] = fig
    if fig in ("2", "3a", "3b"):
        t.params["gamma"] = 2.0 if fig == "2" else 0.7
    if fig in ("3a", "3b"):
        t.params["kind"] = closed_form.EntropyKind.CONTINUATION.value
    t.xlabel = "alpha" if fig == "3b" else "J"
    return t


@dataclass(frozen=True)
class SweepRequest:
    quantity: str
    j_values: tuple[float, ...]
    alpha_values: tuple[float, ...]
    gamma: float | None = None
    n: int | None = None
    k0: float = 1.0
    m: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        if self.quantity not in QUANTITIES:
            raise ValueError(f"unknown quantity {self.quantity!r}")
        if not self.j_values or not self.alpha_values:
            raise ValueError("sweep needs at least one J and one alpha value")
        if self.quantity == "renyi" and self.gamma is None:
            raise ValueError("renyi sweep needs --gamma")
        if self.quantity == "trace_power" and self.n is None:
            raise ValueError("trace_power sweep needs --n")
        if any(a < 0 for a in self.alpha_values):
            raise ValueError("alpha values must be nonnegative")


def run_sweep(req: SweepRequest) -> Table:
    rows = []
    strained = 0
    for J in req.j_values:
        cfg = OscillatorConfig(m=req.m, k0=req.k0, J=J, hbar=req.hbar)
        s = quantity_series(req.quantity, cfg, gamma=req.gamma, n=req.n)
        for a in req.alpha_values:
            rows.append([J, a, s.c0, s.c1, s.evaluate(a)])
            strained += is_strained(s, a)
    params = {"k0": req.k0, "m": req.m, "hbar": req.hbar, "quantity": req.quantity}
    if req.gamma is not None:
        params["gamma"] = req.gamma
    if req.n is not None:
        params["n"] = req.n
    return Table(["J", "alpha", "c0", "c1", "value"], rows, params, strained=strained)
