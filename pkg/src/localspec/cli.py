"""Command-line front end.

Subcommands: ``gamma``, ``spectral``, ``minima`` (value tables), ``padic``
(matrices, eigenvalue reports, symbols, ranges), ``mellin-check`` and
``check`` (invariant suites with measured residuals).

Data goes to stdout, diagnostics to stderr.  CSV output carries a header
line, uses '.' decimals, 17 significant digits and LF line endings; JSON
output is one object per row.  Identical flags produce byte-identical
output.  Exit codes: 0 success, 1 numeric failure or failed checks, 2 flag
errors.
"""

import argparse
import json
import math
import sys

import numpy as np

from . import checks, padic
from .characters import (
    complex_component,
    ramified,
    real_even,
    real_odd,
    unramified,
)
from .gamma_spectral import (
    gamma_factor,
    minimum_h,
    spectral_h,
    spectral_k,
    spectral_kn,
)
from .specfun import PoleError


def _fmt(x):
    return f"{x:.17g}"


def _parse_place_component(place_spec, comp_spec):
    if place_spec == "real":
        if comp_spec == "+":
            return real_even()
        if comp_spec == "-":
            return real_odd()
        raise ValueError("real components are '+' or '-'")
    if place_spec == "complex":
        try:
            return complex_component(int(comp_spec))
        except (TypeError, ValueError):
            raise ValueError("complex components are labeled by an integer")
    if place_spec.startswith("finite:"):
        q = float(place_spec.split(":", 1)[1])
        if comp_spec == "unram":
            return unramified(q)
        if comp_spec == "ram":
            return ramified(q)
        raise ValueError("finite components are 'unram' or 'ram'")
    raise ValueError("--place must be real, complex or finite:Q")


def _parse_op(spec):
    if spec in ("A", "H", "K"):
        return spec, None
    if spec.startswith("KN:"):
        return "KN", int(spec.split(":", 1)[1])
    raise ValueError("--op must be A, H, K or KN:N")


def _parse_range(spec):
    parts = spec.split(":")
    if len(parts) != 3:
        raise ValueError("ranges are a:b:n")
    a, b, n = float(parts[0]), float(parts[1]), int(parts[2])
    if n < 1:
        raise ValueError("ranges need at least one point")
    return np.linspace(a, b, n)


def _parse_complex(spec):
    re, im = spec.split(",")
    return complex(float(re), float(im))


def _emit_rows(fields, rows, fmt):
    if fmt == "csv":
        print(",".join(fields))
        for row in rows:
            print(",".join(_fmt(v) if isinstance(v, float) else str(v) for v in row))
    else:
        for row in rows:
            print(json.dumps(dict(zip(fields, row)), separators=(",", ":")))


def _cmd_gamma(args):
    chi = _parse_place_component(args.place, args.component)
    if args.s is not None:
        s = _parse_complex(args.s)
        v = complex(gamma_factor(chi, s))
        _emit_rows(
            ("s_re", "s_im", "re", "im"),
            [(float(s.real), float(s.imag), v.real, v.imag)],
            args.format,
        )
        return 0
    t = _parse_range(args.t)
    vals = np.atleast_1d(gamma_factor(chi, 0.5 + 1j * t))
    _emit_rows(
        ("t", "re", "im"),
        [(float(ti), float(v.real), float(v.imag)) for ti, v in zip(t, vals)],
        args.format,
    )
    return 0


def _cmd_spectral(args):
    chi = _parse_place_component(args.place, args.component)
    op, order = _parse_op(args.op)

    def evaluate(s):
        if op == "H":
            return spectral_h(chi, s)
        if op == "K":
            return spectral_k(chi, s)
        if op == "KN":
            return spectral_kn(chi, order, s)
        raise ValueError("spectral ops are H, K or KN:N")

    if args.s is not None:
        s = _parse_complex(args.s)
        v = complex(evaluate(s))
        _emit_rows(
            ("s_re", "s_im", "re", "im"),
            [(float(s.real), float(s.imag), v.real, v.imag)],
            args.format,
        )
        return 0
    t = _parse_range(args.t)
    vals = np.atleast_1d(evaluate(0.5 + 1j * t))
    _emit_rows(
        ("t", "re", "im"),
        [(float(ti), float(v.real), float(v.imag)) for ti, v in zip(t, vals)],
        args.format,
    )
    return 0


def _cmd_minima(args):
    chi = _parse_place_component(args.place, args.component)
    v = minimum_h(chi)
    _emit_rows(("place", "component", "minimum"), [(args.place, args.component, float(v))], args.format)
    return 0


def _kind_from_op(op, order):
    if op == "A":
        return padic.KIND_A
    if op == "H":
        return padic.KIND_H
    if op == "K":
        return padic.KIND_K
    return padic.kind_kn(order)


def _cmd_padic(args):
    op, order = _parse_op(args.op)
    kind = _kind_from_op(op, order)
    q = args.q
    if args.emit == "matrix":
        trunc = padic.build_truncation(kind, q, args.M)
        if args.format == "csv":
            sys.stdout.write(padic.matrix_to_csv(trunc))
        else:
            print(json.dumps(padic.matrix_to_exact_json(trunc), separators=(",", ":")))
        return 0
    if args.emit == "eigs":
        trunc = padic.build_truncation(kind, q, args.M)
        lo, hi = padic.extreme_eigenvalues(trunc, args.tol)
        s_lo, s_hi = padic.symbol_range(kind, q)
        fields = ["eig_min", "eig_max", "symbol_min", "symbol_max"]
        row = [lo, hi, s_lo, s_hi]
        if op == "K":
            # leading Fourier mode amplitude, reported for reference only
            fields.append("leading_mode_amplitude")
            row.append(2.0 * math.log(q) ** 2 / math.sqrt(q))
        _emit_rows(tuple(fields), [tuple(float(v) for v in row)], args.format)
        return 0
    if args.emit == "range":
        s_lo, s_hi = padic.symbol_range(kind, q)
        _emit_rows(("min", "max"), [(float(s_lo), float(s_hi))], args.format)
        return 0
    if args.emit == "symbol":
        thetas = _parse_range(args.theta)
        rows = []
        for th in thetas:
            v = padic.symbol(kind, q, float(th))
            rows.append((float(th), float(v.real), float(v.imag)))
        _emit_rows(("theta", "re", "im"), rows, args.format)
        return 0
    raise ValueError("--emit must be matrix, eigs, symbol or range")


def _run_checks(names):
    results = []
    for name in names:
        results.extend(checks.run_suite(name))
    width = max(len(r.name) for r in results)
    failures = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        failures += not r.passed
        residual = r.residual if isinstance(r.residual, str) else _fmt(r.residual)
        tol = r.tolerance if isinstance(r.tolerance, str) else _fmt(r.tolerance)
        print(f"{status}  {r.suite:8s} {r.name:<{width}s}  residual={residual}  tol={tol}")
    print(f"{len(results) - failures}/{len(results)} checks passed")
    return 1 if failures else 0


def _cmd_check(args):
    names = checks.SUITE_NAMES if args.suite == "all" else (args.suite,)
    return _run_checks(names)


def _cmd_mellin_check(args):
    return _run_checks(("mellin",))


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="localspec",
        description="Gamma factors, spectral multipliers and p-adic operator "
        "models of the dilation-invariant log-modulus operators",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")

    table = argparse.ArgumentParser(add_help=False, parents=[common])
    table.add_argument("--place", required=True, help="real | complex | finite:Q")
    table.add_argument("--component", required=True, help="+ | - | N | unram | ram")

    p = sub.add_parser("gamma", parents=[table], help="Gamma factor values")
    p.add_argument("--s", help="point re,im")
    p.add_argument("--t", help="critical-line grid a:b:n")
    p.set_defaults(fn=_cmd_gamma)

    p = sub.add_parser("spectral", parents=[table], help="spectral multiplier tables")
    p.add_argument("--op", required=True, help="H | K | KN:N")
    p.add_argument("--s", help="point re,im")
    p.add_argument("--t", help="critical-line grid a:b:n")
    p.set_defaults(fn=_cmd_spectral)

    p = sub.add_parser("minima", parents=[table], help="closed-form conductor minima")
    p.set_defaults(fn=_cmd_minima)

    p = sub.add_parser("padic", parents=[common], help="exact operator truncations")
    p.add_argument("--q", type=float, required=True)
    p.add_argument("--op", required=True, help="A | H | K | KN:N")
    p.add_argument("--M", type=int, default=64)
    p.add_argument("--emit", choices=("matrix", "eigs", "symbol", "range"), required=True)
    p.add_argument("--theta", default="0:6.283185307179586:64", help="symbol grid a:b:n")
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(fn=_cmd_padic)

    p = sub.add_parser("mellin-check", help="run the multiplicative-side checks")
    p.set_defaults(fn=_cmd_mellin_check)

    p = sub.add_parser("check", help="run invariant suites")
    p.add_argument("--suite", choices=("all",) + checks.SUITE_NAMES, default="all")
    p.set_defaults(fn=_cmd_check)

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command in ("gamma", "spectral") and args.s is None and args.t is None:
            parser.error("need --s or --t")
        return args.fn(args)
    except (PoleError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
