"""Command-line front end.

Exit status: 0 success, 1 an identity check failed, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .boson import parse_word, word_to_normal
from .exactnum import format_rational, parse_rational
from .identities import CHECK_IDS, check_all
from .series import gf_check
from .stirling import (
    Kind,
    build_table,
    check_classical_recurrence,
    classical_limit,
    sign_violations,
)

DEFAULT_CAP = 200


class UsageError(Exception):
    pass


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def _lambda_mode(text: str):
    if text == "symbolic":
        return None
    try:
        q = parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc))
    _, _, den = text.partition("/")
    if den and int(den) != q.denominator:
        raise argparse.ArgumentTypeError(f"fraction {text!r} is not in lowest terms")
    return q


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json", "text"), default="text")
    common.add_argument("--output", "-o", default="-", help="file path, or - for stdout")
    common.add_argument("--cap", type=_nonneg, default=DEFAULT_CAP,
                        help=f"largest allowed n_max/k_max (default {DEFAULT_CAP})")

    p = argparse.ArgumentParser(
        prog="degstirling",
        description="Degenerate Stirling numbers, boson normal ordering and identity checks.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", parents=[common], help="emit a triangular table")
    t.add_argument("--kind", choices=("s1", "s2"), default="s2")
    t.add_argument("--n-max", type=_nonneg, default=5)
    t.add_argument("--lambda", dest="lam", type=_lambda_mode, default=None,
                   metavar="symbolic|p/q")

    v = sub.add_parser("verify", parents=[common], help="run identity checks")
    v.add_argument("--theorem", default="all", help="one of: " + ", ".join(CHECK_IDS + ("all",)))
    v.add_argument("--k-max", type=_nonneg, default=10)

    n = sub.add_parser("normal-order", parents=[common], help="normal order a word in a, a+")
    n.add_argument("word", help='whitespace-separated tokens, e.g. "a a+"')

    g = sub.add_parser("gf", parents=[common], help="generating-function check")
    g.add_argument("--k-max", type=_nonneg, default=None, help="largest column (default: order)")
    g.add_argument("--order", type=_nonneg, default=16, help="truncation order T")

    lim = sub.add_parser("limit", parents=[common], help="l = 0 limit of a table")
    lim.add_argument("--kind", choices=("s1", "s2"), default="s2")
    lim.add_argument("--n-max", type=_nonneg, default=10)
    return p


def _check_cap(args, *values):
    for v in values:
        if v is not None and v > args.cap:
            raise UsageError(f"size {v} exceeds cap {args.cap}; raise it with --cap")


def _kind(name: str) -> Kind:
    return Kind.FIRST if name == "s1" else Kind.SECOND


def _value_text(v, lam) -> str:
    return v.to_human() if lam is None else str(v.eval(lam))


def cmd_table(args) -> tuple[str, int]:
    _check_cap(args, args.n_max)
    table = build_table(_kind(args.kind), args.n_max)
    lam = args.lam
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "k", "value"])
        for n, k, v in table.entries():
            w.writerow([n, k, _value_text(v, lam)])
        return buf.getvalue(), 0
    if args.format == "json":
        rows = []
        for row in table.rows:
            if lam is None:
                rows.append([v.to_json()["coeffs"] for v in row])
            else:
                rows.append([[format_rational(v.eval(lam))] if v.eval(lam) else [] for v in row])
        doc = {
            "kind": args.kind,
            "n_max": args.n_max,
            "lambda": "symbolic" if lam is None else format_rational(lam),
            "rows": rows,
        }
        return json.dumps(doc) + "\n", 0
    lines = [", ".join(_value_text(v, lam) for v in row) for row in table.rows]
    return "\n".join(lines) + "\n", 0


def _reports_out(reports, fmt) -> str:
    if fmt == "json":
        return json.dumps([r.to_json() for r in reports]) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id", "range", "instances", "status"])
        for r in reports:
            w.writerow([r.identity_id, r.range_checked, r.instances, r.status])
        return buf.getvalue()
    lines = [r.to_text() for r in reports]
    failed = sum(not r.passed for r in reports)
    lines.append(f"{len(reports) - failed}/{len(reports)} checks passed")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> tuple[str, int]:
    _check_cap(args, args.k_max)
    if args.theorem != "all" and args.theorem not in CHECK_IDS:
        raise UsageError(f"unknown theorem id {args.theorem!r}")
    only = None if args.theorem == "all" else [args.theorem]
    reports = check_all(args.k_max, only=only)
    status = 0 if all(r.passed for r in reports) else 1
    return _reports_out(reports, args.format), status


def cmd_normal_order(args) -> tuple[str, int]:
    try:
        word = parse_word(args.word)
    except ValueError as exc:
        raise UsageError(str(exc))
    nf = word_to_normal(word)
    if args.format == "json":
        return json.dumps({"word": word, "terms": nf.to_json()}) + "\n", 0
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i", "j", "coeff"])
        for (i, j), c in nf.items():
            w.writerow([i, j, c.to_human()])
        return buf.getvalue(), 0
    return nf.to_text() + "\n", 0


def cmd_gf(args) -> tuple[str, int]:
    k_max = args.order if args.k_max is None else args.k_max
    _check_cap(args, k_max, args.order)
    if k_max > args.order:
        raise UsageError(f"--k-max {k_max} exceeds --order {args.order}")
    reports = [gf_check(k, args.order) for k in range(k_max + 1)]
    status = 0 if all(r.passed for r in reports) else 1
    return _reports_out(reports, args.format), status


def cmd_limit(args) -> tuple[str, int]:
    _check_cap(args, args.n_max)
    kind = _kind(args.kind)
    values = classical_limit(build_table(kind, args.n_max))
    bad = check_classical_recurrence(kind, values)
    if kind is Kind.FIRST:
        bad += sign_violations(values)
    status = 1 if bad else 0
    if args.format == "json":
        doc = {"kind": args.kind, "n_max": args.n_max, "lambda": "0/1", "rows": values,
               "violations": [list(b) for b in bad]}
        return json.dumps(doc) + "\n", status
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "k", "value"])
        for n, row in enumerate(values):
            for k, v in enumerate(row):
                w.writerow([n, k, v])
        return buf.getvalue(), status
    lines = [", ".join(str(v) for v in row) for row in values]
    lines.append("classical recurrence: " + ("FAIL at " + str(bad) if bad else "ok"))
    return "\n".join(lines) + "\n", status


COMMANDS = {
    "table": cmd_table,
    "verify": cmd_verify,
    "normal-order": cmd_normal_order,
    "gf": cmd_gf,
    "limit": cmd_limit,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, status = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2
    try:
        if args.output == "-":
            sys.stdout.write(text)
            sys.stdout.flush()
        else:
            with open(args.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
    except OSError as exc:
        print(f"{parser.prog}: cannot write output: {exc}", file=sys.stderr)
        return 3
    return status


if __name__ == "__main__":
    sys.exit(main())
