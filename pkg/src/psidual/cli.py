"""Command line front end.

    psidual table c --max-m 6 --format csv
    psidual eval hypersum --a 2 --m 3 --n 10 --method both
    psidual verify all

Exit codes: 0 success, 1 an exact comparison failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from fractions import Fraction
from typing import List, Optional

from .coefficients import ROUTES, build_triangle
from .combinatorics import FIRST_UNSIGNED, SECOND, StirlingTriangle
from .formats import FORMATS, fmt_rational, render_bfile, render_csv, render_json
from .identities import IDENTITIES, Bounds, T, U, run_verification
from .powersums import HyperSumQuery, hyper_sum_brute, hyper_sum_expansion
from .psi import psi, psi_general

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

TABLE_KINDS = ("a", "c", "stirling1", "stirling2")
EVAL_KINDS = ("psi", "psi-general", "hypersum", "T", "U")

# parameters each eval variant requires
EVAL_PARAMS = {
    "psi": ("m", "n"),
    "psi-general": ("a", "m", "n"),
    "hypersum": ("a", "m", "n"),
    "T": ("m", "alpha"),
    "U": ("m", "alpha"),
}


class UsageError(Exception):
    pass


def cmd_table(kind: str, max_m: int, fmt: str, route: Optional[str] = None) -> str:
    if fmt not in FORMATS:
        raise UsageError(f"unknown format {fmt!r}")
    if kind in ("stirling1", "stirling2"):
        if route:
            raise UsageError("--route applies to coefficient triangles only")
        if max_m < 0:
            raise UsageError("--max-m must be >= 0 for Stirling tables")
        tri = StirlingTriangle.build(FIRST_UNSIGNED if kind == "stirling1" else SECOND, max_m)
        entries = [(n, k, Fraction(v)) for n, row in enumerate(tri.rows) for k, v in enumerate(row)]
    elif kind in ROUTES:
        if route and route not in ROUTES[kind]:
            raise UsageError(f"route {route!r} not available for kind {kind!r}; choose from {ROUTES[kind]}")
        if max_m < 2:
            raise UsageError("--max-m must be >= 2 for coefficient triangles")
        entries = list(build_triangle(kind, max_m, route).entries())
    else:
        raise UsageError(f"unknown table kind {kind!r}")

    if fmt == "csv":
        return render_csv(entries)
    if fmt == "json":
        return render_json(kind, max_m, entries)
    try:
        return render_bfile(entries)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_eval(what: str, params: dict, method: str = "expansion") -> tuple[str, int]:
    missing = [p for p in EVAL_PARAMS[what] if params.get(p) is None]
    if missing:
        raise UsageError(f"eval {what} needs " + ", ".join("--" + p for p in missing))
    p = params
    if what == "psi":
        return fmt_rational(psi(p["m"], p["n"])), EXIT_OK
    if what == "psi-general":
        return fmt_rational(psi_general(p["a"], p["m"], p["n"])), EXIT_OK
    if what == "T":
        return fmt_rational(T(p["m"], p["alpha"])), EXIT_OK
    if what == "U":
        return fmt_rational(U(p["m"], p["alpha"])), EXIT_OK

    q = HyperSumQuery(p["a"], p["m"], p["n"])
    if method == "brute":
        return str(hyper_sum_brute(q)), EXIT_OK
    expansion = hyper_sum_expansion(q, build_triangle("c", q.m))
    if method == "expansion":
        return str(expansion), EXIT_OK
    brute = hyper_sum_brute(q)
    return f"{brute}, {expansion}", EXIT_OK if brute == expansion else EXIT_FAIL


def _parse_corruption(value: str):
    try:
        kind, m, k = value.split(":")
        m, k = int(m), int(k)
    except ValueError:
        raise UsageError(f"--corrupt-entry expects KIND:M:K, got {value!r}") from None
    if kind not in ROUTES or not 2 <= k <= m:
        raise UsageError(f"bad --corrupt-entry {value!r}")
    return kind, m, k


def cmd_verify(identity: str, bounds: Bounds, fmt: str = "text", verbose: bool = False,
               corrupt: Optional[str] = None) -> tuple[str, int]:
    names = list(IDENTITIES) if identity == "all" else [identity]
    minimal = {"max_m": 2, "max_alpha": 2, "max_n": 2, "max_c": 5}
    for field, low in minimal.items():
        if getattr(bounds, field) < low:
            raise UsageError(f"--{field.replace('_', '-')} must be >= {low}")

    need = max(bounds.max_m, bounds.max_alpha, bounds.max_n, bounds.max_c)
    tables = {"a": build_triangle("a", need), "c": build_triangle("c", need)}
    if corrupt:
        # test hook: perturb one entry so the exit-code path can be exercised
        kind, m, k = _parse_corruption(corrupt)
        if m > need:
            raise UsageError(f"--corrupt-entry row {m} beyond table size {need}")
        tables[kind] = tables[kind].with_entry(m, k, tables[kind][m, k] + 1)

    results = run_verification(names, bounds, tables["a"], tables["c"])
    ok = all(r.passed for reports in results.values() for r in reports)

    if fmt == "json":
        doc = {
            "passed": ok,
            "bounds": asdict(bounds),
            "identities": {
                name: [
                    {
                        "identity": r.identity_name,
                        "point": list(r.parameter_point),
                        "lhs": fmt_rational(r.lhs),
                        "rhs": fmt_rational(r.rhs),
                        "pass": r.passed,
                    }
                    for r in reports
                ]
                for name, reports in results.items()
            },
        }
        return json.dumps(doc, indent=1) + "\n", EXIT_OK if ok else EXIT_FAIL

    lines = []
    for name, reports in results.items():
        failed = [r for r in reports if not r.passed]
        points = len({r.parameter_point for r in reports})
        status = "all pass" if not failed else f"{len(failed)} FAILED"
        lines.append(f"{name}: {len(reports)} checks at {points} points, {status}")
        for r in reports if verbose else failed:
            mark = "ok  " if r.passed else "FAIL"
            lines.append(
                f"  {mark} {r.identity_name} {r.parameter_point}: "
                f"lhs={fmt_rational(r.lhs)} rhs={fmt_rational(r.rhs)}"
            )
    lines.append("OK" if ok else "FAILED")
    return "\n".join(lines) + "\n", EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="psidual", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="print a coefficient or Stirling triangle")
    p.add_argument("kind", choices=TABLE_KINDS)
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--format", default="csv", choices=FORMATS)
    p.add_argument("--route", default=None, help="construction route for a/c triangles")

    p = sub.add_parser("eval", help="evaluate a single quantity exactly")
    p.add_argument("what", choices=EVAL_KINDS)
    for name in ("a", "m", "n", "alpha"):
        p.add_argument(f"--{name}", type=int, default=None)
    p.add_argument("--method", default="expansion", choices=("brute", "expansion", "both"))

    p = sub.add_parser("verify", help="check identities over a parameter range")
    p.add_argument("identity", choices=list(IDENTITIES) + ["all"])
    defaults = Bounds()
    p.add_argument("--max-m", type=int, default=defaults.max_m)
    p.add_argument("--max-alpha", type=int, default=defaults.max_alpha)
    p.add_argument("--max-n", type=int, default=defaults.max_n)
    p.add_argument("--max-c", type=int, default=defaults.max_c)
    p.add_argument("--format", default="text", choices=("text", "json"))
    p.add_argument("-v", "--verbose", action="store_true", help="list every parameter point")
    p.add_argument("--corrupt-entry", default=None, help=argparse.SUPPRESS)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "table":
            out, code = cmd_table(args.kind, args.max_m, args.format, args.route), EXIT_OK
        elif args.command == "eval":
            params = {k: getattr(args, k) for k in ("a", "m", "n", "alpha")}
            out, code = cmd_eval(args.what, params, args.method)
            out += "\n"
        else:
            bounds = Bounds(args.max_m, args.max_alpha, args.max_n, args.max_c)
            out, code = cmd_verify(args.identity, bounds, args.format, args.verbose, args.corrupt_entry)
    except (UsageError, ValueError) as exc:
        print(f"psidual: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as exc:
        print(f"psidual: exactness failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
