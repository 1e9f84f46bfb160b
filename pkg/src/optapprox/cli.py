"""Command-line surface.

Subcommands: approximant, zeros, orthopoly, kernel, cyclicity, levinson,
first-zero, verify.  Functions are described by a JSON FunctionSpec
({"family": ..., "params": {...}} or {"coefficients": [...]}).  Output is
JSON or CSV; rationals serialize as "p/q" strings in the exact backend so
golden comparisons are byte-stable.

Exit codes: 0 success, 2 validation error, 3 numerical breakdown,
4 verification failure.  Errors are emitted as machine-readable JSON on
stderr.  APPROX_THREADS bounds sweep parallelism.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import approximant, families, kernels, levinson, orthopoly, verify, zeros
from .errors import (BreakdownError, ConditioningError, DegenerateError,
                     InstabilityError, OptApproxError, SpecValidationError,
                     UnsupportedAlphaError, ZeroAtOriginError)
from .exact import ExactComplex, format_rational
from .series import Series

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_NUMERICAL = 3
EXIT_VERIFY = 4

_NUMERICAL_ERRORS = (ConditioningError, InstabilityError, BreakdownError,
                     DegenerateError, ZeroAtOriginError, UnsupportedAlphaError)

_ERROR_MODULE = {
    ConditioningError: "approximant",
    InstabilityError: "orthopoly",
    BreakdownError: "levinson",
    ZeroAtOriginError: "dalpha",
    SpecValidationError: "families",
}


def serialize_scalar(x):
    """JSON form of a backend scalar: rationals as 'p/q' strings, floats
    as shortest round-trip decimals, complex as {'re':, 'im':}."""
    if isinstance(x, ExactComplex):
        if x.im == 0:
            return format_rational(x.re)
        return {"re": format_rational(x.re), "im": format_rational(x.im)}
    if isinstance(x, Fraction):
        return format_rational(x)
    c = complex(x)
    if c.imag == 0.0:
        return c.real
    return {"re": c.real, "im": c.imag}


def _emit_error(exc: Exception, code: int) -> int:
    payload = {
        "error": type(exc).__name__,
        "module": _ERROR_MODULE.get(type(exc), "optapprox"),
        "message": str(exc),
    }
    print(json.dumps(payload), file=sys.stderr)
    return code


def _parse_n_range(text: str):
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
    else:
        lo = hi = int(text)
    if hi < lo:
        raise SpecValidationError(f"empty or descending n range {text!r}")
    return range(lo, hi + 1)


def _parse_point(text: str) -> complex:
    parts = text.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    return complex(float(parts[0]), float(parts[1]))


def _load_function(args) -> Series:
    try:
        obj = json.loads(args.f)
    except json.JSONDecodeError as exc:
        raise SpecValidationError(f"--f is not valid JSON: {exc}") from exc
    spec = families.spec_from_json(obj, backend=args.backend)
    if args.backend == "exact":
        alpha = float(getattr(args, "alpha", 0.0))
        if alpha != int(alpha):
            raise SpecValidationError("exact backend requires integer alpha")
    f = families.realize(spec)
    if args.backend == "float" and f.backend == "exact":
        f = f.to_float()
    return f


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("APPROX_THREADS", "4")))
    except ValueError:
        return 4


def _write_output(args, text: str) -> None:
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _zeros_of(p: Series):
    if p.to_float().degree < 1:
        return []
    zs = zeros.poly_roots(p)
    return [{"re": z.real, "im": z.imag, "modulus": abs(z)} for z in zs.roots]


# -- subcommand handlers ------------------------------------------------

def _cmd_approximant(args) -> int:
    f = _load_function(args)
    res = approximant.optimal(f, args.n, args.alpha)
    payload = {
        "alpha": args.alpha,
        "n": args.n,
        "backend": f.backend,
        "coefficients": [serialize_scalar(c) for c in res.p.coeffs],
        "p0": serialize_scalar(res.p_at_zero),
        "distance_sq": serialize_scalar(res.distance_sq),
        "zeros": _zeros_of(res.p),
        "tail_error_bound": res.tail_error_bound,
    }
    _write_output(args, json.dumps(payload, indent=2) + "\n")
    return EXIT_OK


def _cmd_zeros(args) -> int:
    f = _load_function(args)
    ns = list(_parse_n_range(args.n_range))

    def roots_for(n):
        p = approximant.optimal(f, n, args.alpha).p
        if p.to_float().degree < 1:
            return []
        return list(zeros.poly_roots(p).roots)

    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        per_n = list(pool.map(roots_for, ns))

    rows = []
    for n, roots in zip(ns, per_n):
        for idx, z in enumerate(roots):
            rows.append((n, idx, z.real, z.imag, abs(z)))
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["n", "root_index", "re", "im", "modulus"])
        for row in rows:
            w.writerow([row[0], row[1], repr(row[2]), repr(row[3]), repr(row[4])])
        _write_output(args, buf.getvalue())
    else:
        payload = [{"n": r[0], "root_index": r[1], "re": r[2], "im": r[3],
                    "modulus": r[4]} for r in rows]
        _write_output(args, json.dumps(payload, indent=2) + "\n")
    return EXIT_OK


def _cmd_orthopoly(args) -> int:
    f = _load_function(args)
    bas = orthopoly.basis(f, args.n, args.alpha)
    payload = {
        "alpha": args.alpha,
        "n": args.n,
        "backend": f.backend,
        "monic": [[serialize_scalar(c) for c in psi.coeffs] for psi in bas.monic],
        "norms_sq": [serialize_scalar(s) for s in bas.norms_sq],
        "leading_coefficients": list(bas.leading_coefficients()),
        "phis": [[serialize_scalar(c) for c in phi.coeffs] for phi in bas.phis],
    }
    _write_output(args, json.dumps(payload, indent=2) + "\n")
    return EXIT_OK


def _cmd_kernel(args) -> int:
    f = _load_function(args)
    z = _parse_point(args.z)
    w = _parse_point(args.w)
    if f.backend == "exact":
        f = f.to_float()
    ev = kernels.kernel_eval(f, args.n, args.alpha, z, w)
    payload = {
        "alpha": args.alpha,
        "n": args.n,
        "z": {"re": z.real, "im": z.imag},
        "w": {"re": w.real, "im": w.imag},
        "value": serialize_scalar(ev.value),
        "extremal_value_at_zero": kernels.extremal_value(f, args.n, args.alpha),
    }
    _write_output(args, json.dumps(payload, indent=2) + "\n")
    return EXIT_OK


def _cmd_cyclicity(args) -> int:
    f = _load_function(args)
    rep = kernels.cyclicity_report(f, args.alpha, args.max_n)
    rows = [(n, serialize_scalar(rep.pn_at_zero[n]),
             serialize_scalar(rep.partial_sums[n]),
             serialize_scalar(rep.distances[n]))
            for n in range(rep.max_n + 1)]
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["n", "p0", "partial_sum", "distance_sq"])
        for row in rows:
            w.writerow([row[0], json.dumps(row[1]), json.dumps(row[2]),
                        json.dumps(row[3])])
        buf.write(f"# target={json.dumps(serialize_scalar(rep.target))} "
                  f"verdict={rep.verdict_trend}\n")
        _write_output(args, buf.getvalue())
    else:
        payload = {
            "max_n": rep.max_n,
            "target": serialize_scalar(rep.target),
            "verdict_trend": rep.verdict_trend,
            "rows": [{"n": r[0], "p0": r[1], "partial_sum": r[2],
                      "distance_sq": r[3]} for r in rows],
        }
        _write_output(args, json.dumps(payload, indent=2) + "\n")
    return EXIT_OK


def _cmd_levinson(args) -> int:
    f = _load_function(args)
    state = levinson.levinson_solve(f, args.n)
    crit = levinson.outer_criterion_partial(f, args.n)
    payload = {
        "n": args.n,
        "backend": f.backend,
        "coefficients": [serialize_scalar(c) for c in state.coeffs.coeffs],
        "gammas": [serialize_scalar(g) for g in state.gammas],
        "autocorrelation": [serialize_scalar(r) for r in state.autocorr],
        "outer_partial_products": [serialize_scalar(p) for p in crit.partial_products],
        "outer_target": serialize_scalar(crit.target),
    }
    _write_output(args, json.dumps(payload, indent=2) + "\n")
    return EXIT_OK


def _cmd_first_zero(args) -> int:
    f = _load_function(args)
    value, tail = zeros.first_zero_with_tail(f, args.alpha)
    if value == zeros.NO_FINITE_ZERO:
        payload = {"alpha": args.alpha, "finite": False}
    else:
        payload = {"alpha": args.alpha, "finite": True,
                   "value": serialize_scalar(value),
                   "tail_error_bound": tail}
    _write_output(args, json.dumps(payload, indent=2) + "\n")
    return EXIT_OK


def _cmd_verify(args) -> int:
    results = verify.run_verification(only=args.only,
                                      inject_error=args.inject_error)
    if not results:
        print(json.dumps({"error": "SpecValidationError", "module": "cli",
                          "message": f"no checks match {args.only!r}"}),
              file=sys.stderr)
        return EXIT_VALIDATION
    width = max(len(r.name) for r in results)
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{status}  {r.name:<{width}}  expected: {r.expected}  "
                     f"observed: {r.observed}")
    _write_output(args, "\n".join(lines) + "\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


# -- parser --------------------------------------------------------------

def _add_common(sub, with_alpha=True):
    sub.add_argument("--f", required=True,
                     help="function spec as JSON: {\"family\":..., \"params\":{...}}"
                          " or {\"coefficients\": [...]}")
    if with_alpha:
        sub.add_argument("--alpha", type=float, default=0.0)
    sub.add_argument("--backend", choices=("exact", "float"), default="exact")
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    sub.add_argument("--output", default=None, help="output path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="optapprox",
        description="Optimal polynomial approximants to 1/f in Dirichlet-type spaces")
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("approximant", help="solve for the degree-n optimal approximant")
    _add_common(s)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(handler=_cmd_approximant)

    s = subs.add_parser("zeros", help="zero-set sweep over a degree range")
    _add_common(s)
    s.add_argument("--n-range", required=True, help="e.g. 0..50")
    s.set_defaults(handler=_cmd_zeros, format="csv")

    s = subs.add_parser("orthopoly", help="weighted orthonormal polynomial basis")
    _add_common(s)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(handler=_cmd_orthopoly)

    s = subs.add_parser("kernel", help="evaluate the reproducing kernel K_n(z, w)")
    _add_common(s)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--z", default="0", help="point as 're' or 're,im'")
    s.add_argument("--w", default="0")
    s.set_defaults(handler=_cmd_kernel)

    s = subs.add_parser("cyclicity", help="cyclicity diagnostics up to max n")
    _add_common(s)
    s.add_argument("--max-n", type=int, required=True, dest="max_n")
    s.set_defaults(handler=_cmd_cyclicity)

    s = subs.add_parser("levinson", help="Hardy-space Levinson recursion (alpha = 0)")
    _add_common(s, with_alpha=False)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(handler=_cmd_levinson)

    s = subs.add_parser("first-zero", help="zero of the first-order approximant")
    _add_common(s)
    s.set_defaults(handler=_cmd_first_zero)

    s = subs.add_parser("verify", help="run the golden verification set")
    s.add_argument("--only", default=None, help="substring filter on check names")
    s.add_argument("--inject-error", action="store_true",
                   help="negative control: flip the first check's outcome")
    s.add_argument("--output", default=None)
    s.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_VALIDATION if exc.code not in (0, None) else EXIT_OK
    try:
        return args.handler(args)
    except SpecValidationError as exc:
        return _emit_error(exc, EXIT_VALIDATION)
    except _NUMERICAL_ERRORS as exc:
        return _emit_error(exc, EXIT_NUMERICAL)
    except OptApproxError as exc:
        return _emit_error(exc, EXIT_NUMERICAL)
    except ValueError as exc:
        return _emit_error(exc, EXIT_VALIDATION)


if __name__ == "__main__":
    sys.exit(main())
