"""Command-line surface: build formulas, verify identities, run the demo.

Subcommands:

* ``convergent``  print the n-th convergent as a rational function
* ``series``      print mu, nu, g or the specialized Al-Salam-Ismail sum
* ``verify``      run an identity suite; exit 0 only if every case passes
* ``eval``        numeric convergence table at a point (q, lambda, b)

Exit codes are stable for CI use: 0 success / all cases pass, 1 at least one
verification failure, 2 usage error.  Text output is deterministic for fixed
arguments; ``--format json`` (and ``csv`` for eval) emit the documented
machine formats, optionally to ``--out`` instead of stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import core, numeric, verify
from .poly import RationalFunction

USAGE_ERROR = 2

SUITES = ("entry16", "theorem1", "recursion", "telescoping", "asi", "division", "all")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rrcf",
        description="Exact convergents of the generalized Rogers-Ramanujan continued fraction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_conv = sub.add_parser("convergent", help="print the n-th convergent")
    p_conv.add_argument("--n", type=int, required=True, help="depth of the continued fraction (>= 1)")
    _output_flags(p_conv)

    p_series = sub.add_parser("series", help="print one of the defining sums")
    p_series.add_argument("--which", choices=("mu", "nu", "g", "asi"), required=True)
    p_series.add_argument("--n", type=int, required=True)
    p_series.add_argument("--s", type=int, default=None, help="shift parameter, g only (0 <= s <= n+1)")
    _output_flags(p_series)

    p_verify = sub.add_parser("verify", help="run an exact identity suite")
    p_verify.add_argument("--suite", choices=SUITES, required=True)
    p_verify.add_argument("--n-max", type=int, default=10, dest="n_max")
    p_verify.add_argument("--seed", type=int, default=0)
    _output_flags(p_verify)

    p_eval = sub.add_parser("eval", help="numeric convergence demonstration")
    p_eval.add_argument("--q", type=float, required=True, help="base, |q| < 1")
    p_eval.add_argument("--lambda", type=float, required=True, dest="lam")
    p_eval.add_argument("--b", type=float, required=True)
    p_eval.add_argument("--n-max", type=int, default=10, dest="n_max")
    p_eval.add_argument("--k", type=int, default=50, help="series truncation bound")
    _output_flags(p_eval, csv=True)

    return parser


def _output_flags(p: argparse.ArgumentParser, csv: bool = False) -> None:
    formats = ("text", "json", "csv") if csv else ("text", "json")
    p.add_argument("--format", choices=formats, default="text")
    p.add_argument("--out", type=Path, default=None, help="write output to a file instead of stdout")


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        print(text)
    else:
        out.write_text(text + "\n")


def _render_rf(rf: RationalFunction, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rf.to_json(), indent=2)
    return str(rf)


def _cmd_convergent(args: argparse.Namespace) -> int:
    if args.n < 1:
        print(f"error: --n must be >= 1, got {args.n}", file=sys.stderr)
        return USAGE_ERROR
    _emit(_render_rf(core.convergent(args.n), args.format), args.out)
    return 0


def _cmd_series(args: argparse.Namespace) -> int:
    which = args.which
    if which != "g" and args.s is not None:
        print("error: --s only applies to --which g", file=sys.stderr)
        return USAGE_ERROR
    try:
        if which == "mu":
            obj = RationalFunction(core.mu(args.n))
        elif which == "nu":
            obj = RationalFunction(core.nu(args.n))
        elif which == "asi":
            obj = core.asi_u(args.n)
        else:
            if args.s is None:
                print("error: --which g requires --s", file=sys.stderr)
                return USAGE_ERROR
            obj = core.g(args.n, args.s)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    _emit(_render_rf(obj, args.format), args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        if args.suite == "all":
            reports = verify.run_all(args.n_max, seed=args.seed)
        elif args.suite == "entry16":
            reports = [verify.check_entry16(args.n_max)]
        elif args.suite == "theorem1":
            reports = [verify.check_theorem1(args.n_max)]
        elif args.suite == "recursion":
            reports = [verify.check_recursion(args.n_max)]
        elif args.suite == "telescoping":
            reports = [verify.check_telescoping(args.n_max)]
        elif args.suite == "asi":
            reports = [verify.check_asi(args.n_max)]
        else:
            reports = [verify.check_division_step(seed=args.seed)]
    except verify.InvalidRange as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if args.format == "json":
        payload = reports[0].to_json() if len(reports) == 1 else [r.to_json() for r in reports]
        text = json.dumps(payload, indent=2)
    else:
        text = "\n".join(r.render_text() for r in reports)
    _emit(text, args.out)
    return 0 if all(r.all_passed for r in reports) else 1


def _render_eval_text(report: numeric.ConvergenceReport) -> str:
    pt = report.point
    lines = [
        f"q={pt.q!r} lambda={pt.lam!r} b={pt.b!r} "
        f"series_ratio={report.series_ratio!r} truncation_terms={report.truncation_terms}"
    ]
    for row in report.rows:
        lines.append(f"n={row.n} convergent={row.convergent!r} deviation={row.deviation!r}")
    return "\n".join(lines)


def _cmd_eval(args: argparse.Namespace) -> int:
    if args.n_max < 1 or args.k < 1:
        print("error: --n-max and --k must be >= 1", file=sys.stderr)
        return USAGE_ERROR
    try:
        pt = numeric.NumericPoint(q=args.q, lam=args.lam, b=args.b)
        report = numeric.convergence_demo(pt, args.n_max, args.k)
    except numeric.NonConvergent as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except numeric.NumericBreakdown as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        text = json.dumps(report.to_json(), indent=2)
    elif args.format == "csv":
        text = report.to_csv().rstrip("\n")
    else:
        text = _render_eval_text(report)
    _emit(text, args.out)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    handler = {
        "convergent": _cmd_convergent,
        "series": _cmd_series,
        "verify": _cmd_verify,
        "eval": _cmd_eval,
    }[args.command]
    return handler(args)


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
