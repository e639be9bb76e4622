"""Command-line front end.

    seqcorr gen legendre --p 7 -o s.txt
    seqcorr gen mseq --poly 1011 -o m.txt          # X^3+X^2+1, c0 c1 c2 then 1
    seqcorr corr s.txt t.txt --kind arithmetic --all --format csv
    seqcorr verify theorem4 --n 3..10
    seqcorr tables all
    seqcorr patterns m.txt --tau 1 --k 0

Exit status: 0 all checks pass, 1 a mathematical check failed, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path
from typing import Any, Optional, Sequence

from . import analysis
from .algebra import Gf2Poly
from .correlation import common_period, profile
from .sequences import BinarySequence, SequenceSpec, is_balanced

SCHEMA = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    pass


# ---------- sequence files


def format_sequence(s: BinarySequence, spec: Optional[SequenceSpec] = None) -> str:
    kind = str(spec) if spec is not None else "literal"
    return f"# period={s.period} kind={kind}\n{s.to_string()}\n"


def parse_sequence(text: str, source: str = "<input>") -> BinarySequence:
    header_period = None
    body = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            for field in line[1:].split():
                key, _, value = field.partition("=")
                if key == "period":
                    try:
                        header_period = int(value)
                    except ValueError:
                        raise InputError(f"{source}: bad period in header {line!r}") from None
            continue
        body.append(line)
    if len(body) != 1:
        raise InputError(f"{source}: expected exactly one line of bits, found {len(body)}")
    try:
        s = BinarySequence(body[0])
    except ValueError as exc:
        raise InputError(f"{source}: {exc}") from None
    if header_period is not None and header_period != s.period:
        raise InputError(f"{source}: header says period={header_period} but found {s.period} bits")
    return s


def read_sequence(path: str) -> BinarySequence:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_sequence(text, path)


# ---------- output helpers


def _emit_json(command: str, params: dict, status: str, results: Any, started: float) -> None:
    report = {
        "schema": SCHEMA,
        "command": command,
        "parameters": params,
        "status": status,
        "results": results,
        "timing_ms": round((time.perf_counter() - started) * 1000, 3),
    }
    print(json.dumps(report, indent=2))


def _emit_csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> None:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _int_list(text: str) -> list[int]:
    """``"3..10"`` (inclusive) or ``"5,11,13"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a range like 3..10 or a list like 5,11: {text!r}")


# ---------- commands


def _spec_from_args(args) -> SequenceSpec:
    if args.kind == "mseq":
        if (args.poly is None) == (args.poly_expr is None):
            raise InputError("mseq needs exactly one of --poly or --poly-expr")
        try:
            poly = (
                Gf2Poly.from_coeff_string(args.poly)
                if args.poly is not None
                else Gf2Poly.parse(args.poly_expr)
            )
        except ValueError as exc:
            raise InputError(str(exc)) from None
        seed = None
        if args.seed is not None:
            if set(args.seed) - {"0", "1"}:
                raise InputError(f"seed must be a bit string, got {args.seed!r}")
            seed = tuple(int(ch) for ch in args.seed)
        return SequenceSpec("mseq", poly=poly, seed=seed)
    if args.kind == "literal":
        return SequenceSpec("literal", bits=args.bits)
    return SequenceSpec(args.kind, p=args.p, a=args.a)


def cmd_gen(args) -> int:
    try:
        spec = _spec_from_args(args)
        s = spec.build()
    except ValueError as exc:
        raise InputError(str(exc)) from None
    text = format_sequence(s, spec)
    summary = f"period={s.period} ones={s.ones()} balanced={'yes' if is_balanced(s) else 'no'}"
    if args.out in (None, "-"):
        sys.stdout.write(text)
        print(summary, file=sys.stderr)
    else:
        try:
            Path(args.out).write_text(text)
        except OSError as exc:
            raise InputError(f"cannot write {args.out}: {exc.strerror}") from None
        print(summary)
    return EXIT_OK


def cmd_corr(args) -> int:
    started = time.perf_counter()
    s = read_sequence(args.s_file)
    t = read_sequence(args.t_file)
    n = common_period(s, t)
    params = {"s_file": args.s_file, "t_file": args.t_file, "kind": args.kind, "common_period": n}
    if args.all:
        prof = profile(s, t, args.kind, jobs=args.jobs)
        if args.format == "csv":
            _emit_csv(["tau", "value"], prof.items())
        elif args.format == "json":
            results = {"kind": prof.kind, "mode": prof.mode, "common_period": n, "values": list(prof.values)}
            _emit_json("corr", params, "info", results, started)
        else:
            for tau, v in prof.items():
                print(f"{tau}\t{v}")
        return EXIT_OK
    value = profile(s, t, args.kind, lags=[args.lag]).values[0]
    if args.format == "json":
        _emit_json("corr", dict(params, lag=args.lag), "info", {"value": value}, started)
    elif args.format == "csv":
        _emit_csv(["tau", "value"], [(args.lag, value)])
    else:
        print(value)
    return EXIT_OK


def _suite_options(args) -> dict[str, Any]:
    return {
        "max_period": args.max_period,
        "degrees": args.n,
        "primes": args.p,
        "max_degree": args.max_degree,
        "count": args.count,
        "seed": args.seed,
        "jobs": args.jobs,
        "all_polys": True if args.all_polys else None,
    }


def cmd_verify(args) -> int:
    started = time.perf_counter()
    names = [n for n in analysis.SUITES] if args.suite == "all" else [args.suite]
    opts = _suite_options(args)
    results = [analysis.run_suite(name, **opts) for name in names]
    ok = all(r.passed for r in results)
    if args.format == "json":
        params = {"suite": args.suite, **{k: v for k, v in opts.items() if v is not None}}
        payload = [
            {"suite": r.name, "passed": r.passed, "reports": [rep.to_dict() for rep in r.reports]}
            for r in results
        ]
        _emit_json("verify", params, "pass" if ok else "fail", payload, started)
    else:
        for r in results:
            informational = all(rep.passed is None for rep in r.reports)
            status = "INFO" if informational else "PASS" if r.passed else "FAIL"
            print(f"{r.name}: {status} ({len(r.reports)} checks)")
            shown = list(r.reports if args.verbose else r.failures)
            shown += [rep for rep in r.reports if rep.detail and rep not in shown and rep.passed is None]
            for rep in shown:
                verdict = {True: "ok", False: "FAILED", None: "info"}[rep.passed]
                extra = f" ratio={rep.ratio:.4g}" if rep.ratio is not None else ""
                print(f"  [{verdict}] {rep.check} {rep.params} observed={rep.observed} bound={rep.bound}{extra} {rep.detail}".rstrip())
    return EXIT_OK if ok else EXIT_FAIL


def cmd_tables(args) -> int:
    started = time.perf_counter()
    rows = analysis.reproduce_tables(args.which, spot=args.spot_lags, seed=args.seed)
    ok = all(r.passed for r in rows)
    if args.format == "json":
        _emit_json("tables", {"which": args.which, "spot_lags": args.spot_lags, "seed": args.seed},
                   "pass" if ok else "fail", [r.to_dict() for r in rows], started)
    elif args.format == "csv":
        _emit_csv(["table", "row", "expected", "computed", "match"],
                  [(r.table, r.label, _show(r.expected), _show(r.computed), int(r.passed)) for r in rows])
    else:
        for r in rows:
            mark = "match" if r.passed else "MISMATCH"
            line = f"table {r.table}  {r.label:<40} expected {_show(r.expected):>22}  computed {_show(r.computed):>22}  {mark}"
            print(line + (f"  ({r.detail})" if r.detail and not r.passed else ""))
        by_table: dict[str, list] = {}
        for r in rows:
            by_table.setdefault(r.table, []).append(r.passed)
        for table, flags in by_table.items():
            print(f"table {table}: {sum(flags)}/{len(flags)} rows match")
    return EXIT_OK if ok else EXIT_FAIL


def _show(v: Any) -> str:
    if isinstance(v, (set, frozenset)):
        return "{" + ",".join(str(x) for x in sorted(v)) + "}"
    return str(v)


def cmd_patterns(args) -> int:
    started = time.perf_counter()
    s = read_sequence(args.s_file)
    try:
        if args.t_file is not None:
            if args.tau is not None:
                raise InputError("give either a second file or --tau, not both")
            t = read_sequence(args.t_file)
            counts = analysis.joint_pattern_counts(s, t, args.k)
            params = {"s_file": args.s_file, "t_file": args.t_file, "k": args.k}
        else:
            if args.tau is None:
                raise InputError("patterns needs a second file or --tau")
            counts = analysis.auto_pattern_counts(s, args.tau, args.k, args.variant)
            params = {"s_file": args.s_file, "tau": args.tau, "k": args.k, "variant": args.variant}
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.format == "json":
        _emit_json("patterns", params, "info", [{"pattern": c.pattern, "count": c.count} for c in counts], started)
    elif args.format == "csv":
        _emit_csv(["pattern", "count"], [(c.pattern, c.count) for c in counts])
    else:
        for c in counts:
            print(f"{c.pattern}\t{c.count}")
    return EXIT_OK


# ---------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seqcorr", description="Classical and arithmetic correlation of binary sequences."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate one period of a sequence")
    g.add_argument("kind", choices=SequenceSpec.KINDS)
    g.add_argument("--p", type=int, help="prime (legendre, lseq)")
    g.add_argument("--a", type=int, default=None, help="lseq multiplier (default 1)")
    g.add_argument("--poly", help="coefficient string c0 c1 ... c_{n-1} 1, e.g. 1011 for X^3+X^2+1")
    g.add_argument("--poly-expr", help='polynomial expression, e.g. "x^3+x^2+1"')
    g.add_argument("--seed", help="initial LFSR state s0 s1 ... (default 10...0)")
    g.add_argument("--bits", help="bit string for kind=literal")
    g.add_argument("-o", "--out", help="output file (default stdout)")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("corr", help="correlation of two sequence files")
    c.add_argument("s_file")
    c.add_argument("t_file")
    c.add_argument("--kind", choices=("classical", "arithmetic"), default="arithmetic")
    lag = c.add_mutually_exclusive_group()
    lag.add_argument("--lag", type=int, default=0)
    lag.add_argument("--all", action="store_true", help="every lag of the common period")
    c.add_argument("--format", choices=("text", "csv", "json"), default="text")
    c.add_argument("--jobs", type=int, default=1)
    c.set_defaults(func=cmd_corr)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=analysis.SUITES + ("all",))
    v.add_argument("--max-period", type=int, help="theorem1: largest common period swept")
    v.add_argument("--n", type=_int_list, help="degrees, e.g. 3..10 (theorem4, mseq, lemma3)")
    v.add_argument("--p", type=_int_list, help="primes, e.g. 5,11,13,29 (lseq)")
    v.add_argument("--max-degree", type=int, help="lemma2 / cross_ratio: largest degree")
    v.add_argument("--count", type=int, help="symmetry: number of random sequences")
    v.add_argument("--seed", type=int, help="random seed")
    v.add_argument("--all-polys", action="store_true", help="lemma2: every primitive polynomial pair")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("-v", "--verbose", action="store_true")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("tables", help="reproduce the published tables")
    t.add_argument("which", choices=("1", "2", "noncoprime", "all"))
    t.add_argument("--spot-lags", type=int, default=10, help="random lags checked per row besides lag 0")
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--format", choices=("text", "csv", "json"), default="text")
    t.set_defaults(func=cmd_tables)

    pt = sub.add_parser("patterns", help="joint or shifted pattern counts")
    pt.add_argument("s_file")
    pt.add_argument("t_file", nargs="?")
    pt.add_argument("--tau", type=int)
    pt.add_argument("--k", type=int, required=True)
    pt.add_argument("--variant", choices=("joint", "contiguous"), default="joint")
    pt.add_argument("--format", choices=("text", "csv", "json"), default="text")
    pt.set_defaults(func=cmd_patterns)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"seqcorr: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"seqcorr: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
