"""Command-line entry point.

Exit codes: 0 success, 1 a suite or cross-check failed, 2 bad usage or
parameters, 3 output could not be written.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from .analysis.suites import SUITES, UnknownSuiteError, run_suites
from .coeffs import u_at
from .decomp import decompose
from .fq import FieldContext
from .lseries import SERIES_BUILDERS, Params
from .qwords import render_number
from .tables import build_table

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    params: Params
    a_given: bool
    args: argparse.Namespace


def _common(parser: argparse.ArgumentParser):
    parser.add_argument("--p", type=int, default=3, help="characteristic")
    parser.add_argument("--e", type=int, default=1, help="extension degree, q = p^e")
    parser.add_argument("--s", type=int, default=2, help="1 < s < q")
    parser.add_argument("--a", default=None, help="field element, coordinates constant-first, e.g. 2 or 1,1")
    parser.add_argument("--format", choices=["ascii", "json", "csv"], default="ascii")
    parser.add_argument("--out", default=None, help="output file (default: standard output)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="autotrans", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="b, c or d table for rows 1..m-max")
    _common(p)
    p.add_argument("--kind", choices=["b", "c", "d"], default="b")
    p.add_argument("--j", type=int, default=2)
    p.add_argument("--m-max", type=int, default=4)

    p = sub.add_parser("series", help="dump a truncated series")
    _common(p)
    p.add_argument("--which", choices=sorted(SERIES_BUILDERS), default="star")
    p.add_argument("--prec", type=int, default=32)

    p = sub.add_parser("coeff", help="one coefficient through the series and through decompositions")
    _common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--prec", type=int, default=None, help="series precision (default n+1)")

    p = sub.add_parser("decompose", help="greedy chain and all decompositions of b")
    _common(p)
    p.add_argument("--b", type=int, required=True)

    p = sub.add_parser("verify", help="run verification suites")
    _common(p)
    p.add_argument("--suite", action="append", default=None,
                   help=f"suite name, repeatable; 'all' runs every suite ({', '.join(SUITES)})")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for independent suite runs")
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    try:
        ctx = FieldContext(args.p, args.e)
        a = ctx.parse(args.a) if args.a is not None else ctx.zero
        params = Params(ctx, args.s, a)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return RunConfig(args.command, params, args.a is not None, args)


def _cmd_table(cfg: RunConfig) -> tuple[str, int]:
    args = cfg.args
    if args.j < 1 or args.m_max < 1:
        raise UsageError("need --j >= 1 and --m-max >= 1")
    table = build_table(args.kind, args.j, cfg.params, args.m_max)
    return table.render(args.format), EXIT_OK


def _cmd_series(cfg: RunConfig) -> tuple[str, int]:
    args = cfg.args
    if args.prec < 1:
        raise UsageError("--prec must be positive")
    f = SERIES_BUILDERS[args.which](cfg.params, args.prec)
    P = cfg.params
    if args.format == "json":
        doc = {"which": args.which, "q": P.q, "s": P.s, "a": P.a.literal, "prec": f.prec, "coeffs": f.coord_lists()}
        return json.dumps(doc) + "\n", EXIT_OK
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "coeff"])
        for n, c in enumerate(f):
            w.writerow([n, c.literal])
        return buf.getvalue(), EXIT_OK
    lines = [f"{args.which} q={P.q} s={P.s} a={P.a.literal} prec={f.prec}"]
    lines += [f"{n}: {c.literal}" for n, c in enumerate(f)]
    return "\n".join(lines) + "\n", EXIT_OK


def _cmd_coeff(cfg: RunConfig) -> tuple[str, int]:
    args = cfg.args
    n = args.n
    prec = n + 1 if args.prec is None else args.prec
    if n < 0 or n >= prec:
        raise UsageError(f"need 0 <= n < prec (n={n}, prec={prec})")
    via_series = SERIES_BUILDERS["star"](cfg.params, prec)[n]
    via_chain = u_at(n, cfg.params)
    match = via_series == via_chain
    if args.format == "json":
        text = json.dumps({"n": n, "series": via_series.literal, "chain": via_chain.literal, "match": match}) + "\n"
    elif args.format == "csv":
        text = f"n,series,chain,match\n{n},{via_series.literal},{via_chain.literal},{str(match).lower()}\n"
    else:
        text = f"series: {via_series.literal}\nchain: {via_chain.literal}\n{'match' if match else 'MISMATCH'}\n"
    return text, EXIT_OK if match else EXIT_FAIL


def _cmd_decompose(cfg: RunConfig) -> tuple[str, int]:
    args = cfg.args
    if args.b < 0:
        raise UsageError("--b must be nonnegative")
    q = cfg.params.q
    dec = decompose(args.b, cfg.params)
    found = [
        {"n": n, "r": render_number(r, q), "k": k, "eps": list(E)}
        for n, (r, k, E) in zip(dec.I, dec.decompositions())
    ]
    if args.format == "json":
        doc = {"b": args.b, "q": q, "chain": dec.rendered_chain(), "I": list(dec.I), "decompositions": found}
        return json.dumps(doc) + "\n", EXIT_OK
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "b_n", "in_I", "k", "eps"])
        for n, value in enumerate(dec.chain, start=1):
            k = dec.k_at(n)
            eps = " ".join(map(str, dec.lvals[: n - 1]))
            w.writerow([n, render_number(value, q), n in dec.I, "" if k is None else k, eps])
        return buf.getvalue(), EXIT_OK
    lines = [
        f"b = {args.b} ({render_number(args.b, q)} in base {q})",
        "chain: " + ", ".join(dec.rendered_chain()),
        "I: {" + ", ".join(map(str, dec.I)) + "}",
    ]
    for d in found:
        eps = ", ".join(map(str, d["eps"]))
        lines.append(f"n={d['n']}: r={d['r']} k={d['k']} eps={{{eps}}}")
    return "\n".join(lines) + "\n", EXIT_OK


def _cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    args = cfg.args
    names = args.suite or ["all"]
    if "all" in names:
        names = list(SUITES)
    try:
        reports = run_suites(names, cfg.params, every_a=not cfg.a_given, jobs=args.jobs)
    except UnknownSuiteError as exc:
        raise UsageError(f"unknown suite {exc.args[0]!r}; known: {', '.join(SUITES)}") from None
    ok = all(r.passed for r in reports)
    if args.format == "json":
        text = json.dumps([r.to_json() for r in reports], indent=2, default=str) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["suite", "params", "pass", "counterexample"])
        for r in reports:
            w.writerow([r.suite, json.dumps(r.params), r.passed, json.dumps(r.counterexample, default=str)])
        text = buf.getvalue()
    else:
        text = "\n".join(r.summary() for r in reports)
        text += f"\n{sum(r.passed for r in reports)}/{len(reports)} suites passed\n"
    return text, EXIT_OK if ok else EXIT_FAIL


COMMANDS = {
    "table": _cmd_table,
    "series": _cmd_series,
    "coeff": _cmd_coeff,
    "decompose": _cmd_decompose,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _config(args)
        text, code = COMMANDS[args.command](cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
