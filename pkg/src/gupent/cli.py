"""Command-line front end.

    gupent verify [--fast]
    gupent figure {1,2,3a,3b} --out FILE [--force] [--plot PNG]
    gupent entropy --gamma G --j J --alpha A [--k0 K --m M --hbar H]
    gupent sweep --quantity Q --j J [J ...] --alpha A [A ...] --out FILE [...]

Exit codes: 0 success, 1 verification or validation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _err(msg: str) -> None:
    print(f"gupent: {msg}", file=sys.stderr)


def _warn_strain(count: int) -> None:
    if count:
        _err(f"warning: {count} value(s) have |alpha*c1/c0| > 0.1; "
             "first-order truncation may be unreliable there")


def cmd_verify(args) -> int:
    try:
        import numpy as np
        if np.finfo(float).eps > 1e-15:
            raise ImportError("float64 arithmetic is required")
    except ImportError as exc:
        _err(f"invalid environment: {exc}")
        return EXIT_USAGE
    from .verify import run_checks
    return EXIT_OK if run_checks(fast=args.fast) else EXIT_FAIL


def cmd_figure(args) -> int:
    from .reports import figure_table, write_csv
    table = figure_table(args.id, k0=args.k0, m=args.m, hbar=args.hbar)
    write_csv(table, args.out, force=args.force)
    if args.plot:
        from .plotting import render_table
        render_table(table, args.plot)
    _warn_strain(table.strained)
    return EXIT_OK


def cmd_entropy(args) -> int:
    from .closed_form import entropy
    from .model import OscillatorConfig, normal_modes
    from .reports import is_strained
    cfg = OscillatorConfig(m=args.m, k0=args.k0, J=args.j, hbar=args.hbar)
    if args.gamma == 1:
        _err("note: gamma = 1 is the von Neumann limit; reporting the entanglement of formation")
    res = entropy(args.gamma, normal_modes(cfg), cfg.m, cfg.hbar)
    v = res.value
    print(f"gamma: {res.gamma!r}")
    print(f"kind: {res.kind.value}")
    print(f"c0: {float(v.c0)!r}")
    print(f"c1: {float(v.c1)!r}")
    print(f"alpha: {args.alpha!r}")
    print(f"value: {float(v.evaluate(args.alpha))!r}")
    if res.kind.value == "continuation":
        print("note: non-integer order uses the conjectured continuation of the trace formula")
    _warn_strain(int(is_strained(v, args.alpha)))
    return EXIT_OK


def cmd_sweep(args) -> int:
    from .reports import SweepRequest, run_sweep, to_csv, write_csv
    req = SweepRequest(args.quantity, tuple(args.j), tuple(args.alpha), gamma=args.gamma,
                       n=args.n, k0=args.k0, m=args.m, hbar=args.hbar)
    table = run_sweep(req)
    if args.out:
        write_csv(table, args.out, force=args.force)
    else:
        sys.stdout.write(to_csv(table))
    _warn_strain(table.strained)
    return EXIT_OK


def _nonneg(text: str) -> float:
    v = float(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"{text} must be nonnegative")
    return v


def _add_units(p: argparse.ArgumentParser) -> None:
    p.add_argument("--k0", type=float, default=1.0, help="spring constant (default 1)")
    p.add_argument("--m", type=float, default=1.0, help="mass (default 1)")
    p.add_argument("--hbar", type=float, default=1.0, help="reduced Planck constant (default 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gupent",
        description="Entanglement of GUP-coupled harmonic oscillators to first order in alpha.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the self-check suite")
    p.add_argument("--fast", action="store_true", help="skip the slow checks")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("figure", help="write the data behind a figure as CSV")
    p.add_argument("id", choices=["1", "2", "3a", "3b"])
    p.add_argument("--out", required=True, help="CSV output path")
    p.add_argument("--force", action="store_true", help="overwrite an existing file")
    p.add_argument("--plot", metavar="IMAGE", help="also render the figure to this image file")
    _add_units(p)
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("entropy", help="Renyi entropy (or EoF at gamma=1) at one point")
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--j", type=_nonneg, required=True, help="coupling J")
    p.add_argument("--alpha", type=_nonneg, default=0.0, help="GUP parameter")
    _add_units(p)
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("sweep", help="tabulate a quantity over J and alpha")
    p.add_argument("--quantity", required=True,
                   choices=["purity", "renyi", "eof", "trace_power", "energy"])
    p.add_argument("--gamma", type=float, help="Renyi order (renyi only)")
    p.add_argument("--n", type=int, help="power of the reduced state (trace_power only)")
    p.add_argument("--j", type=_nonneg, nargs="+", required=True)
    p.add_argument("--alpha", type=_nonneg, nargs="+", required=True)
    p.add_argument("--out", help="CSV output path (stdout if omitted)")
    p.add_argument("--force", action="store_true")
    _add_units(p)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, FileExistsError) as exc:
        _err(str(exc))
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
