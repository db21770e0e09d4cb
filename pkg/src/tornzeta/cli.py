"""Command-line interface.

Subcommands: eval, oracle, verify, suite, constants, bernoulli.  Series
are named with the compact spec syntax (``A3:s=2``, ``An:n=4,s=0``,
``halfint:c``, ``baseT:2``, ``ln``, ``on``, ``S111``,
``tornheim:a=2,b=1,c=1``).  TORNZETA_DIGITS overrides the default 50-digit
working precision.  Exit code 0 means every requested check passed.
"""

from __future__ import annotations

import argparse
import sys

from mpmath import mp

from .closedform import closed_form_of
from .exact import bernoulli
from .harness import PRESETS, emit, render_reports, verify
from .harness import run_suite as _run_suite
from .oracle import (
    NumericCfg,
    OracleError,
    const_ln2,
    const_pi,
    const_zeta,
    default_digits,
    oracle_for,
    zx_numeric,
)
from .series import parse_spec
from .zexpr import zx_normalize


def _fmt(x, digits: int) -> str:
    with mp.workdps(digits + 10):
        return mp.nstr(mp.mpf(x), digits, strip_zeros=False)


def _fmt30(x) -> str:
    return _fmt(x, 30)


def _add_numeric_opts(p: argparse.ArgumentParser, with_method: bool = True) -> None:
    p.add_argument("--digits", type=int, default=None, help="working precision (default 50)")
    p.add_argument("--nmax", type=int, default=None, help="series cutoff (default 10^6)")
    p.add_argument("--quad-levels", type=int, default=None, help="max quadrature levels")
    if with_method:
        p.add_argument(
            "--method",
            choices=("raw", "diagonal", "quadrature"),
            default="diagonal",
            help="oracle route (default diagonal)",
        )


def _cfg_from(args, method: str | None = None) -> NumericCfg:
    kwargs = {}
    kwargs["digits"] = args.digits if args.digits is not None else default_digits()
    if args.nmax is not None:
        kwargs["n_max"] = args.nmax
    if args.quad_levels is not None:
        kwargs["quad_levels"] = args.quad_levels
    kwargs["method"] = method if method is not None else args.method
    return NumericCfg(**kwargs)


def _cmd_eval(args) -> int:
    spec = parse_spec(args.spec)
    closed = closed_form_of(spec)
    digits = args.digits if args.digits is not None else default_digits()
    shown = zx_normalize(closed, "prefer-pi") if args.prefer_pi else closed
    print(spec.label())
    print(f"  closed form: {shown.render()}")
    print(f"  numeric:     {_fmt30(zx_numeric(closed, digits))}")
    return 0


def _cmd_oracle(args) -> int:
    spec = parse_spec(args.spec)
    cfg = _cfg_from(args)
    res = oracle_for(spec, cfg)
    print(spec.label())
    print(f"  method:   {res.method}")
    print(f"  value:    {_fmt30(res.value)}")
    if res.n_used is not None:
        print(f"  n_used:   {res.n_used}")
    if res.levels_used is not None:
        print(f"  levels:   {res.levels_used}")
    print(f"  tail_bound:     {_fmt(res.tail_bound, 6)}")
    print(f"  error_estimate: {_fmt(res.error_estimate, 6)}")
    print(f"  elapsed:  {res.elapsed:.3f}s")
    return 0


def _cmd_verify(args) -> int:
    spec = parse_spec(args.spec)
    cfg = _cfg_from(args)
    report = verify(spec, cfg, args.tol)
    print(render_reports([report], "text"), end="")
    return 0 if report.passed else 1


def _cmd_suite(args) -> int:
    digits = args.digits if args.digits is not None else default_digits()
    manifest = PRESETS[args.preset](digits)
    reports = _run_suite(manifest, parallel=args.parallel)
    if args.out == "-":
        emit(reports, args.format, sys.stdout)
    else:
        with open(args.out, "w", newline="") as sink:
            emit(reports, args.format, sink)
        npass = sum(r.passed for r in reports)
        print(f"{npass}/{len(reports)} identities verified -> {args.out}")
    return 0 if all(r.passed for r in reports) else 1


def _cmd_constants(args) -> int:
    digits = args.digits if args.digits is not None else default_digits()
    printed = False
    if args.zeta is not None:
        print(f"zeta({args.zeta}) = {_fmt(const_zeta(args.zeta, digits), digits)}")
        printed = True
    if args.ln2:
        print(f"ln2 = {_fmt(const_ln2(digits), digits)}")
        printed = True
    if args.pi:
        print(f"pi = {_fmt(const_pi(digits), digits)}")
        printed = True
    if not printed:
        raise ValueError("nothing requested; use --zeta K, --ln2 and/or --pi")
    return 0


def _cmd_bernoulli(args) -> int:
    print(bernoulli(args.n))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tornzeta",
        description="Closed forms and numeric verification for Tornheim-like series",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="print the exact closed form and its numeric value")
    p.add_argument("spec", help="series spec, e.g. A3:s=2 or halfint:c")
    p.add_argument("--digits", type=int, default=None)
    p.add_argument("--prefer-pi", action="store_true", help="show even zeta values as pi powers")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("oracle", help="numerically estimate a series by one oracle route")
    p.add_argument("spec")
    _add_numeric_opts(p)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("verify", help="compare closed form against an oracle")
    p.add_argument("spec")
    p.add_argument("--tol", type=float, default=1e-8)
    _add_numeric_opts(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("suite", help="run a preset identity suite and emit a report")
    p.add_argument("--preset", choices=sorted(PRESETS), default="smoke")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", default="-", help="output file, - for stdout")
    p.add_argument("--parallel", action="store_true")
    p.add_argument("--digits", type=int, default=None)
    p.set_defaults(func=_cmd_suite)

    p = sub.add_parser("constants", help="print high-precision constants")
    p.add_argument("--zeta", type=int, default=None, metavar="K")
    p.add_argument("--ln2", action="store_true")
    p.add_argument("--pi", action="store_true")
    p.add_argument("--digits", type=int, default=None)
    p.set_defaults(func=_cmd_constants)

    p = sub.add_parser("bernoulli", help="print an exact Bernoulli number")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_bernoulli)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OracleError as exc:
        print(f"oracle failure: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
