"""Command line interface: evaluate expressions, sum series, run probes and the matrix."""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from .errors import ExprSyntaxError, OrdFieldError
from .expr import eval_text, format_value, parse
from .fields import DEFAULT_ORDER, axiom_suite, get_field
from .laurent import SeriesSequence, ls_const, ls_monomial, ls_sum_series
from .probes import decimal_interval_probe, probe_property
from .report import compare, expected_statuses, load_fixture, render, run_matrix
from .results import Status

FIELD_CHOICES = ["q", "ratfun", "ratfun-eps", "laurent"]

SERIES_FAMILIES = {
    # name: (description, term i -> the (i+1)-th summand, bound)
    "alt-geometric": ("sum_{n>=1} (-1)^n e^n",
                      lambda i: ls_monomial(i + 1, (-1) ** (i + 1)), lambda k: max(k, 0)),
    "geometric": ("sum_{n>=1} e^n", lambda i: ls_monomial(i + 1), lambda k: max(k, 0)),
    "exp": ("sum_{n>=0} e^n / n!", lambda i: ls_monomial(i, Fraction(1, math.factorial(i))),
            lambda k: max(k, 0) + 1),
    "log": ("sum_{n>=1} (-1)^(n+1) e^n / n",
            lambda i: ls_monomial(i + 1, Fraction((-1) ** i, i + 1)), lambda k: max(k, 0)),
    "lacunary": ("sum_{n>=0} e^(n^2)", lambda i: ls_monomial(i * i),
                 lambda k: math.isqrt(max(k, 0)) + 1),
    "zero": ("0 + 0 + ...", lambda i: ls_const(0), lambda k: 0),
}


class UsageError(Exception):
    pass


def _handle(args):
    return get_field(args.field, order=getattr(args, "order", None))


def cmd_eval(args):
    h = _handle(args)
    print(format_value(eval_text(args.expr, h), h))
    return 0


def cmd_cmp(args):
    h = _handle(args)
    a, b = eval_text(args.left, h), eval_text(args.right, h)
    if isinstance(a, bool) or isinstance(b, bool):
        raise UsageError("cmp takes two expressions without comparison operators")
    print({-1: "<", 0: "=", 1: ">"}[int(h.cmp(a, b))])
    return 0


def cmd_sum(args):
    if args.field != "laurent":
        raise UsageError("series sums are computed in the laurent field")
    desc, at, bound = SERIES_FAMILIES[args.terms]
    h = _handle(args)
    total = ls_sum_series(SeriesSequence(at, bound, name=args.terms), h.order)
    print(f"{desc} = {total.format(h.order)}")
    return 0


def cmd_probe(args):
    h = _handle(args)
    candidates = None
    if args.candidate:
        candidates = [eval_text(c, h) for c in args.candidate]
    if args.property == "axioms":
        result = axiom_suite(h, args.trials, args.seed)
    elif args.property == "decimal":
        result = decimal_interval_probe(h, candidates=candidates or ())
    else:
        try:
            n = int(args.property)
        except ValueError:
            raise UsageError(f"property must be 1..18, axioms or decimal, not {args.property!r}")
        if not 1 <= n <= 18:
            raise UsageError("property must be in 1..18")
        result = probe_property(h, n, candidates=candidates, seed=args.seed)
    if args.json:
        print(json.dumps(result.to_dict(), indent=2, ensure_ascii=False))
    else:
        print(result.summary())
    code = 0
    bad = [w for w in result.witnesses if not w.verify()]
    if bad:
        print(f"{len(bad)} witness(es) failed to re-verify", file=sys.stderr)
        code = 1
    if args.expect and result.status.value != Status(args.expect).value:
        print(f"expected {args.expect}, got {result.status.value}", file=sys.stderr)
        code = 1
    return code


def cmd_matrix(args):
    fields = [get_field(name) for name in args.fields.split(",")] if args.fields else None
    report = run_matrix(fields, args.seed)
    sys.stdout.write(render(report, args.format))
    if args.check is not None:
        expected = expected_statuses() if args.check == "" else load_fixture(args.check)
        mismatches = compare(report, expected)
        for name, prop, want, got in mismatches:
            print(f"mismatch {name} ({prop}): expected {want}, got {got}", file=sys.stderr)
        return 1 if mismatches else 0
    return 0


def cmd_repl(args, stdin=None, stdout=None):
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    h = _handle(args)
    interactive = stdin.isatty()

    def emit(line):
        stdout.write(line + "\n")

    if interactive:
        emit(f"field {h.label}; :field NAME, :order K, :parse EXPR, :quit")
    while True:
        if interactive:
            stdout.write(f"{h.name}> ")
            stdout.flush()
        line = stdin.readline()
        if not line:
            break
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line in (":quit", ":q", ":exit"):
            break
        try:
            if line.startswith(":field"):
                h = get_field(line.split(None, 1)[1].strip(), order=h.order)
                emit(f"field {h.label}")
            elif line.startswith(":order"):
                h = get_field(h.name, order=int(line.split(None, 1)[1]))
                emit(f"order {h.order}")
            elif line.startswith(":parse"):
                emit(repr(parse(line.split(None, 1)[1])))
            else:
                emit(format_value(eval_text(line, h), h))
        except (OrdFieldError, ValueError, IndexError) as exc:
            emit(f"error: {exc}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ordfield",
                                description="Exact arithmetic and completeness probes in "
                                            "ordered fields Q, Q(w) and Q((e)).")
    sub = p.add_subparsers(dest="command", required=True)

    def field_arg(sp, default="laurent"):
        sp.add_argument("--field", choices=FIELD_CHOICES, default=default)

    def order_arg(sp):
        sp.add_argument("--order", type=int, default=None,
                        help=f"Laurent print/compare order (default $ORDFIELD_ORDER or {DEFAULT_ORDER})")

    sp = sub.add_parser("eval", help="evaluate an expression or comparison")
    sp.add_argument("expr")
    field_arg(sp)
    order_arg(sp)
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("cmp", help="compare two expressions")
    sp.add_argument("left")
    sp.add_argument("right")
    field_arg(sp)
    order_arg(sp)
    sp.set_defaults(func=cmd_cmp)

    sp = sub.add_parser("sum", help="sum a built-in series family in Q((e))")
    sp.add_argument("--terms", choices=sorted(SERIES_FAMILIES), required=True)
    field_arg(sp)
    order_arg(sp)
    sp.set_defaults(func=cmd_sum)

    sp = sub.add_parser("probe", help="probe one property (1..18, axioms or decimal)")
    sp.add_argument("property")
    field_arg(sp)
    sp.add_argument("--candidate", action="append",
                    help="candidate element (repeatable); default is a seeded battery")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=1000, help="trials for the axiom suite")
    sp.add_argument("--expect", choices=[s.value for s in Status],
                    help="exit 1 unless the status matches")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_probe)

    sp = sub.add_parser("matrix", help="run every probe in every field")
    sp.add_argument("--format", choices=["json", "md", "markdown"], default="md")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--fields", help="comma separated field names (default q,ratfun,laurent)")
    sp.add_argument("--check", nargs="?", const="", default=None, metavar="FIXTURE",
                    help="exit 1 unless statuses match FIXTURE (default: the shipped table)")
    sp.set_defaults(func=cmd_matrix)

    sp = sub.add_parser("repl", help="interactive evaluator")
    field_arg(sp)
    order_arg(sp)
    sp.set_defaults(func=cmd_repl)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except ExprSyntaxError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return 2
    except (OrdFieldError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
