"""Command-line interface: ``riordan expand|matrix|verify|bfile``.

Exit codes: 0 success, 1 verification failure or b-file mismatch, 2 usage,
parse or domain error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .arrays import (
    AlmostRiordanPair,
    ExpRiordanPair,
    RiordanPair,
    almost_riordan_matrix,
    exp_riordan_matrix,
    riordan_matrix,
)
from .bfile import compare, read_bfile
from .errors import ParseError, RiordanError
from .gfparse import contains_y, eval_bivariate, eval_univariate, parse
from .partial_sums import (
    col_partial_sum,
    row_partial_sum,
    row_ps_inverse_finite,
    row_ps_inverse_infinite,
)
from .production import production_matrix
from .verify import case_ids, run_cases

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

TRANSFORMS = ("rowps", "colps", "inverse", "production", "hessenberg_finite", "hessenberg_infinite")
REDUCERS = ("diag_sums", "row_sums")


class UsageError(Exception):
    pass


# -- formatting ---------------------------------------------------------------


def fmt(v) -> str:
    """Exact text: ``n`` for integers, ``p/q`` otherwise."""
    return str(v)


def render_sequence(values, style: str) -> str:
    cells = [fmt(v) for v in values]
    if style == "json":
        return json.dumps(cells)
    if style == "csv":
        return ",".join(cells)
    return " ".join(cells)


def render_matrix(rows, style: str) -> str:
    cells = [[fmt(v) for v in r] for r in rows]
    if style == "json":
        return json.dumps(cells)
    if style == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(cells)
        return buf.getvalue().rstrip("\n")
    if not cells:
        return ""
    width = max(len(c) for r in cells for c in r)
    return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)


# -- subcommands --------------------------------------------------------------


def _series(text: str, order: int):
    return eval_univariate(parse(text), order)


def expand_values(args):
    """``(kind, data)`` with kind ``sequence`` or ``matrix``."""
    expr = parse(args.expr)
    if contains_y(expr) or args.y_order is not None:
        ny = args.y_order if args.y_order is not None else args.order
        b = eval_bivariate(expr, args.order, ny)
        return "matrix", [[b.coeff(n, k) for k in range(ny)] for n in range(args.order)]
    return "sequence", list(eval_univariate(expr, args.order).coeffs)


def _build(args, n: int):
    """The pair named on the command line, its ``n x n`` matrix builder."""
    work = n + 2
    g, f = _series(args.g, work), _series(args.f, work)
    if args.kind == "riordan":
        p = RiordanPair(g, f)
        return p, lambda k: riordan_matrix(p, k)
    if args.kind == "exp":
        p = ExpRiordanPair(g, f)
        return p, lambda k: exp_riordan_matrix(p, k)
    if args.a is None:
        raise UsageError("--kind almost needs --a EXPR")
    p = AlmostRiordanPair(_series(args.a, work), g, f)
    return p, lambda k: almost_riordan_matrix(p, k)


def matrix_values(args):
    n = args.order
    chosen = [t for t in TRANSFORMS if getattr(args, t)]
    reducers = [r for r in REDUCERS if getattr(args, r)]
    if len(chosen) > 1:
        raise UsageError("choose at most one of --" + ", --".join(t.replace("_", "-") for t in TRANSFORMS))
    if len(reducers) > 1:
        raise UsageError("choose at most one of --diag-sums, --row-sums")
    pair, build = _build(args, n)
    op = chosen[0] if chosen else None
    riordan_only = {"rowps", "colps", "hessenberg_finite", "hessenberg_infinite"}
    if op in riordan_only and args.kind != "riordan":
        raise UsageError(f"--{op.replace('_', '-')} needs --kind riordan")
    if op is None:
        m = build(n)
    elif op == "rowps":
        m = row_partial_sum(pair, n)
    elif op == "colps":
        m = riordan_matrix(col_partial_sum(pair), n)
    elif op == "inverse":
        m = build(n).inverse()
    elif op == "production":
        m = production_matrix(build(n + 1))
    elif op == "hessenberg_finite":
        m = row_ps_inverse_finite(pair, n)
    else:
        m = row_ps_inverse_infinite(pair, n)
    if reducers == ["diag_sums"]:
        return "sequence", m.diagonal_sums()
    if reducers == ["row_sums"]:
        return "sequence", m.row_sums()
    return "matrix", m.tolist()


def _emit(kind, data, style, out):
    text = render_sequence(data, style) if kind == "sequence" else render_matrix(data, style)
    print(text, file=out)


def cmd_expand(args, out) -> int:
    kind, data = expand_values(args)
    _emit(kind, data, args.format, out)
    return EXIT_OK


def cmd_matrix(args, out) -> int:
    kind, data = matrix_values(args)
    _emit(kind, data, args.format, out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    ids = case_ids() if args.case == "all" else [args.case]
    try:
        report = run_cases(ids, order=args.order, jobs=args.jobs)
    except KeyError:
        raise UsageError(f"unknown case {args.case!r}; available: all, " + ", ".join(case_ids())) from None
    if args.format == "json":
        print(report.to_json(), file=out)
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id", "section", "status", "detail"])
        for c in report.cases:
            w.writerow([c.id, c.section, c.status, c.detail])
        print(buf.getvalue().rstrip("\n"), file=out)
    else:
        print("\n".join(report.lines()), file=out)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_bfile(args, out) -> int:
    if not args.source:
        raise UsageError("bfile needs a sequence source, e.g. `expand EXPR --order N`")
    source = build_parser().parse_args(args.source)
    if source.command == "expand":
        kind, data = expand_values(source)
    elif source.command == "matrix":
        kind, data = matrix_values(source)
    else:
        raise UsageError("the sequence source must be an expand or matrix command")
    if kind != "sequence":
        raise UsageError("the sequence source produced a matrix; add --diag-sums or --row-sums")
    for v in data:
        if getattr(v, "denominator", 1) != 1:
            raise UsageError(f"non-integer term {fmt(v)} cannot be compared with a b-file")
    result = compare([int(v) for v in data], read_bfile(args.path), offset=args.offset)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "compared": result.compared,
                    "matched_prefix": result.matched_prefix,
                    "mismatch": None if result.mismatch is None else [str(v) for v in result.mismatch],
                    "ok": result.ok,
                },
                sort_keys=True,
            ),
            file=out,
        )
    else:
        print(result.describe(), file=out)
    return EXIT_OK if result.ok else EXIT_FAIL


# -- parser -------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    fmt_opts = dict(choices=("pretty", "csv", "json"), default="pretty", help="output format")
    p = _Parser(prog="riordan", description="Exact Riordan array computations and reproduction checks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("expand", help="expand a generating function")
    e.add_argument("expr")
    e.add_argument("--order", type=_positive, required=True)
    e.add_argument("--y-order", type=_positive, default=None)
    e.add_argument("--format", **fmt_opts)

    m = sub.add_parser("matrix", help="build a matrix from a pair of expressions")
    m.add_argument("g")
    m.add_argument("f")
    m.add_argument("--order", type=_positive, required=True)
    m.add_argument("--kind", choices=("riordan", "exp", "almost"), default="riordan")
    m.add_argument("--a", default=None, help="first column of an almost-Riordan array")
    for t in TRANSFORMS + REDUCERS:
        m.add_argument("--" + t.replace("_", "-"), dest=t, action="store_true")
    m.add_argument("--format", **fmt_opts)

    v = sub.add_parser("verify", help="run reproduction checks")
    v.add_argument("case", help="case id or 'all'")
    v.add_argument("--order", type=_positive, default=8)
    v.add_argument("--jobs", type=_positive, default=1)
    v.add_argument("--format", **fmt_opts)

    b = sub.add_parser("bfile", help="compare a sequence with an OEIS b-file")
    b.add_argument("path")
    b.add_argument("--offset", type=int, default=0, help="b-file index matching our term 0")
    b.add_argument("--format", **fmt_opts)
    b.epilog = "the sequence source follows the options: expand ... or matrix ... --diag-sums"
    return p


def _split_bfile(argv: list):
    """Separate ``bfile`` options from the nested source command."""
    for i, tok in enumerate(argv):
        if i > 0 and tok in ("expand", "matrix"):
            return argv[:i], argv[i:]
    return argv, []


COMMANDS = {"expand": cmd_expand, "matrix": cmd_matrix, "verify": cmd_verify, "bfile": cmd_bfile}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        argv = list(sys.argv[1:] if argv is None else argv)
        source = []
        if argv and argv[0] == "bfile":
            argv, source = _split_bfile(argv)
        args = build_parser().parse_args(argv)
        args.source = source
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
    except OSError as exc:
        print(f"error: {exc}", file=err)
    except RiordanError as exc:
        print(f"{type(exc).__name__}: {exc}", file=err)
    return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
