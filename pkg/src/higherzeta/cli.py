"""Command-line surface.

Commands
    eval TARGET          evaluate one function on a point or a grid
    coeffs               dump Dirichlet coefficient tables
    verify SUITE         run an identity-verification suite
    tauberian            partial-sum asymptotic check
    zeros-import PATH    validate (and normalize) a zero table

Output is CSV (or TSV) with a header row; complex numbers always occupy two
columns.  Grids use start:stop:step, inclusive of the start, with the stop
included when it lies on the grid to within 1e-12.  Exit codes: 0 ok,
1 verification failure, 2 usage or parse error, 3 mathematical domain error.
Every error path prints a single line `error:<kind>:<message>` to stderr.
"""

from __future__ import annotations

import argparse
import sys

from .barnes import WeightVector, barnes_zeta, multiple_gamma, multiple_sine
from .errors import HigherZetaError, OrderError, ParseError
from .explicit import (completed_riemann_zeta, default_zero_table, load_zeros)
from .higher import (HigherZetaContext, completed_lattice_zeta,
                     dirichlet_coeffs, higher_zeta, lambda_hat)
from .kernel import PrecisionPolicy, hurwitz_zeta, riemann_zeta
from .sequences import dotted_product, parse_complex, parse_sequence
from . import suites


class _UsageError(ParseError):
    kind = "usage"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _parse_grid(text: str) -> list[complex]:
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ParseError(f"grid must be start:stop:step, got {text!r}")
        try:
            start, stop, step = (float(p) for p in parts)
        except ValueError as exc:
            raise ParseError(f"bad grid bounds in {text!r}") from exc
        if step <= 0 or stop < start:
            raise ParseError("grid needs step > 0 and stop >= start")
        out = []
        k = 0
        tol = 1e-12 * max(1.0, abs(stop))
        while True:
            v = start + k * step
            if v > stop + tol:
                break
            out.append(complex(v))
            k += 1
        return out
    return [parse_complex(text)]


def _policy(args) -> PrecisionPolicy:
    return PrecisionPolicy(eps_abs=args.eps, eps_rel=args.eps,
                           max_terms=args.max_terms)


def _omega(text: str) -> WeightVector:
    return WeightVector(tuple(parse_complex(p) for p in text.split(",") if p.strip()))


def _emit(header, rows, args):
    delim = "\t" if args.format == "tsv" else ","
    lines = [delim.join(header)]
    for row in rows:
        lines.append(delim.join(repr(v) if isinstance(v, float) else str(v)
                                for v in row))
    text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -------------------------- eval --------------------------

def _cmd_eval(args) -> int:
    pol = _policy(args)
    target = args.target
    ctx = HigherZetaContext(spec=parse_sequence(args.seq), pol=pol) \
        if args.seq else None
    omega = _omega(args.omega) if args.omega else None

    def need(cond, what):
        if not cond:
            raise _UsageError(f"target {target!r} needs {what}")

    if target in ("riemann-zeta", "completed-zeta"):
        need(args.s, "--s")
        fn = riemann_zeta if target == "riemann-zeta" else completed_riemann_zeta
        points = _parse_grid(args.s)
        rows = [(p.real, p.imag, *_reim(fn(p, pol))) for p in points]
    elif target == "hurwitz-zeta":
        need(args.s and args.a, "--s and --a")
        a = parse_complex(args.a)
        points = _parse_grid(args.s)
        rows = [(p.real, p.imag, *_reim(hurwitz_zeta(p, a, pol))) for p in points]
    elif target == "barnes-zeta":
        need(args.s and args.z and omega, "--s, --z and --omega")
        z = parse_complex(args.z)
        points = _parse_grid(args.s)
        rows = [(p.real, p.imag, *_reim(barnes_zeta(p, z, omega, pol)))
                for p in points]
    elif target in ("multiple-gamma", "multiple-sine"):
        need(args.z and omega, "--z and --omega")
        fn = multiple_gamma if target == "multiple-gamma" else multiple_sine
        points = _parse_grid(args.z)
        rows = [(p.real, p.imag, *_reim(fn(p, omega, pol))) for p in points]
    elif target == "higher-zeta":
        need(args.s and ctx, "--s and --seq")
        points = _parse_grid(args.s)
        rows = [(p.real, p.imag, *_reim(higher_zeta(p, ctx))) for p in points]
    elif target in ("z-hat", "lambda-hat"):
        need(args.s and omega, "--s and --omega")
        hctx = ctx or HigherZetaContext(spec=parse_sequence("list:0"), pol=pol)
        fn = completed_lattice_zeta if target == "z-hat" else lambda_hat
        points = _parse_grid(args.s)
        rows = [(p.real, p.imag, *_reim(fn(p, omega, hctx))) for p in points]
    elif target == "dotted-product":
        need(args.z and ctx, "--z and --seq")
        points = _parse_grid(args.z)
        rows = [(p.real, p.imag, *_reim(dotted_product(p, ctx.spec, pol)))
                for p in points]
    else:
        raise _UsageError(f"unknown eval target {target!r}")
    _emit(("s_re", "s_im", "val_re", "val_im"), rows, args)
    return 0


def _reim(v: complex):
    return (v.real, v.imag)


# -------------------------- coeffs / tauberian --------------------------

def _cmd_coeffs(args) -> int:
    pol = _policy(args)
    ctx = HigherZetaContext(spec=parse_sequence(args.seq), pol=pol)
    table = dirichlet_coeffs(ctx, args.n_max)
    rows = []
    acc = 0.0 + 0.0j
    for n in range(1, args.n_max + 1):
        g = table.g[n]
        if args.partial_sums:
            acc += g
            rows.append((n, g.real, g.imag, acc.real, acc.imag))
        else:
            rows.append((n, g.real, g.imag))
    header = ("n", "g_re", "g_im", "sum_re", "sum_im") if args.partial_sums \
        else ("n", "g_re", "g_im")
    _emit(header, rows, args)
    return 0


def _cmd_tauberian(args) -> int:
    pol = _policy(args)
    rows, header = suites.suite_tauberian(parse_sequence(args.seq), args.x, pol)
    _emit(header, rows, args)
    return 0


# -------------------------- verify --------------------------

def _cmd_verify(args) -> int:
    pol = _policy(args)
    name = args.suite
    if name == "ladder-gamma":
        result = suites.suite_ladder_gamma(_omega(args.omega), args.points, pol)
    elif name == "ladder-sine":
        result = suites.suite_ladder_sine(_omega(args.omega), args.points, pol)
    elif name == "ccc":
        result = suites.suite_ccc(_omega(args.omega), args.points, pol)
    elif name == "telescope":
        result = suites.suite_telescope(_omega(args.omega), pol=pol)
    elif name == "ddd":
        result = suites.suite_ddd(_omega(args.omega), args.points, pol)
    elif name == "lambda-product":
        result = suites.suite_lambda_product(_omega(args.omega),
                                             min(args.points, 6), pol)
    elif name == "zhat-ladder":
        result = suites.suite_zhat_ladder(_omega(args.omega), args.points, pol)
    elif name == "zhat-symmetry":
        result = suites.suite_zhat_symmetry(pol=pol)
    elif name == "aaa":
        table = load_zeros(args.zeros) if args.zeros else default_zero_table()
        result = suites.suite_aaa(table, parse_complex(args.z),
                                  parse_complex(args.s or "2"), args.nz,
                                  args.prime_bound, args.n_bound, pol)
    elif name == "bbb":
        table = load_zeros(args.zeros) if args.zeros else default_zero_table()
        result = suites.suite_bbb(parse_sequence(args.seq or "list:0"), table,
                                  parse_complex(args.s or "2.5"), pol)
    elif name == "euler-dirichlet":
        result = suites.suite_euler_dirichlet(
            parse_sequence(args.seq or "list:0,2"),
            parse_complex(args.s or "2.5"), args.n_max, args.tol, pol)
    else:
        raise _UsageError(f"unknown verify suite {name!r}")
    if args.tol is not None and name != "euler-dirichlet":
        result.tolerance = args.tol
        result.passed = result.max_residual <= args.tol
    _emit(result.header, result.rows, args)
    print(f"suite={result.name} max_residual={result.max_residual!r} "
          f"tolerance={result.tolerance!r} "
          f"status={'pass' if result.passed else 'fail'}", file=sys.stderr)
    return 0 if result.passed else 1


# -------------------------- zeros-import --------------------------

def _cmd_zeros_import(args) -> int:
    table = load_zeros(args.path)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            for g in table.gammas:
                fh.write(repr(g) + "\n")
    _emit(("count", "first", "last", "source"),
          [(table.count, table.gammas[0], table.gammas[-1], table.source)],
          args)
    return 0


# -------------------------- parser --------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="higherzeta",
                     description="higher Riemann zeta / multiple gamma toolkit")
    parser.add_argument("--eps", type=float, default=1e-10,
                        help="absolute accuracy target (default 1e-10)")
    parser.add_argument("--max-terms", type=int, default=32,
                        help="series truncation cap (default 32)")
    parser.add_argument("--output", help="write CSV here instead of stdout")
    parser.add_argument("--format", choices=("csv", "tsv"), default="csv")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a function")
    p_eval.add_argument("target", choices=(
        "hurwitz-zeta", "riemann-zeta", "barnes-zeta", "multiple-gamma",
        "multiple-sine", "higher-zeta", "z-hat", "lambda-hat",
        "completed-zeta", "dotted-product"))
    p_eval.add_argument("--s", help="point or start:stop:step grid")
    p_eval.add_argument("--z", help="point or start:stop:step grid")
    p_eval.add_argument("--a", help="Hurwitz shift parameter")
    p_eval.add_argument("--omega", help="comma-separated weights, e.g. 1,2")
    p_eval.add_argument("--seq", help="sequence spec: list:.. | ap:.. | lattice:..")
    p_eval.set_defaults(fn=_cmd_eval)

    p_coef = sub.add_parser("coeffs", help="Dirichlet coefficients g(n)")
    p_coef.add_argument("--seq", required=True)
    p_coef.add_argument("--n-max", type=int, required=True)
    p_coef.add_argument("--partial-sums", action="store_true")
    p_coef.set_defaults(fn=_cmd_coeffs)

    p_ver = sub.add_parser("verify", help="run an identity suite")
    p_ver.add_argument("suite", choices=(
        "ladder-gamma", "ladder-sine", "ccc", "telescope", "ddd",
        "lambda-product", "aaa", "bbb", "euler-dirichlet", "zhat-symmetry",
        "zhat-ladder"))
    p_ver.add_argument("--omega", default="1,2")
    p_ver.add_argument("--seq")
    p_ver.add_argument("--zeros", help="zero table path (default: builtin)")
    p_ver.add_argument("--nz", type=int, default=1000)
    p_ver.add_argument("--z", default="2")
    p_ver.add_argument("--s")
    p_ver.add_argument("--prime-bound", type=int, default=10 ** 6)
    p_ver.add_argument("--n-bound", type=int, default=40)
    p_ver.add_argument("--n-max", type=int, default=10 ** 4)
    p_ver.add_argument("--points", type=int, default=10)
    p_ver.add_argument("--tol", type=float, default=None)
    p_ver.set_defaults(fn=_cmd_verify)

    p_tau = sub.add_parser("tauberian", help="coefficient partial-sum check")
    p_tau.add_argument("--seq", required=True)
    p_tau.add_argument("--x", type=float, default=1e4)
    p_tau.set_defaults(fn=_cmd_tauberian)

    p_zi = sub.add_parser("zeros-import", help="validate a zero table")
    p_zi.add_argument("path")
    p_zi.add_argument("--out", help="write a normalized copy here")
    p_zi.set_defaults(fn=_cmd_zeros_import)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except (ParseError, OrderError) as exc:
        print(f"error:{exc.kind}:{exc}", file=sys.stderr)
        return 2
    except HigherZetaError as exc:
        print(f"error:{exc.kind}:{exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
