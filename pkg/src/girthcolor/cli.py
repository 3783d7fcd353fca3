"""Command line entry point: ``girthcolor {gen,run,verify,audit,bench}``.

Exit codes: 0 all checks passed, 1 a check failed, 2 bad usage, 3 I/O error,
4 malformed input, 5 promise violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import harness
from .colorers import ALGORITHMS, RunResult, read_audit_jsonl, run as run_colorer
from .errors import InstanceFormatError
from .graph import load_instance
from .params import LayerConfig
from .parity import girth
from .verify import config_for, verify_audit

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_IO, EXIT_MALFORMED, EXIT_PROMISE = 0, 1, 2, 3, 4, 5


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _read(path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_IO) from None


def _write(path, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc.strerror}", EXIT_IO) from None


def _load_stream(path):
    try:
        return load_instance(_read(path))
    except InstanceFormatError as exc:
        raise CliError(f"{path}: {exc}", EXIT_MALFORMED) from None


def _load_result(path) -> RunResult:
    try:
        return RunResult.from_dict(json.loads(_read(path)))
    except (ValueError, KeyError, TypeError) as exc:
        raise CliError(f"{path}: not a run result ({exc})", EXIT_MALFORMED) from None


def _load_trace(path) -> list[dict]:
    try:
        return read_audit_jsonl(_read(path))
    except ValueError as exc:
        raise CliError(f"{path}: not an audit trace ({exc})", EXIT_MALFORMED) from None


def cmd_gen(args) -> int:
    kw = harness.spec_kwargs(args)
    try:
        stream, text = harness.generate_text(args.kind, **kw)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_USAGE) from None
    _write(args.output, text)
    from .generators import guarantees
    info = {"n": stream.n, "m": stream.m, **guarantees(args.kind, **kw)}
    print(json.dumps(info), file=sys.stderr if args.output in (None, "-") else sys.stdout)
    return EXIT_OK


def cmd_run(args) -> int:
    stream = _load_stream(args.input)
    config = None
    if args.c is not None or args.delta is not None:
        if args.algo != "layered" or args.unknown_n:
            raise CliError("--c/--delta only apply to plain layered runs", EXIT_USAGE)
        default = LayerConfig.default(stream.n, args.k)
        c = args.c if args.c is not None else default.c
        delta = Fraction(args.delta) if args.delta is not None else Fraction(6)
        config = LayerConfig.custom_params(stream.n, args.k, c, delta)
    result = run_colorer(stream, args.algo, args.k, config=config, unknown_n=args.unknown_n,
                         n0=args.n0)
    if args.out:
        _write(args.out, result.to_json())
    if args.audit:
        _write(args.audit, result.audit_jsonl())
    if result.promise_violation is not None:
        pv = result.promise_violation
        print(f"promise violation at vertex {pv['vertex']} "
              f"(neighbor {pv['conflicting_neighbor']}): {pv['reason']}", file=sys.stderr)
        return EXIT_PROMISE
    print(f"{result.algorithm} k={result.k} n={result.n}: colors_used={result.colors_used} "
          f"max_color={result.max_color}")
    if not args.out:
        sys.stdout.write(result.to_json())
    return EXIT_OK


def _ff_girth(args, stream):
    if args.girth is None:
        return None
    if args.girth == "auto":
        return girth(stream)
    try:
        return int(args.girth)
    except ValueError:
        raise CliError("--girth takes an integer or 'auto'", EXIT_USAGE) from None


def cmd_verify(args) -> int:
    stream = _load_stream(args.input)
    result = _load_result(args.result)
    trace = _load_trace(args.audit) if args.audit else None
    try:
        report = harness.verify_all(stream, result, trace, args.level, args.check_odd_girth,
                                    ff_girth=_ff_girth(args, stream))
    except ValueError as exc:
        raise CliError(f"files do not match: {exc}", EXIT_MALFORMED) from None
    print(report.summary())
    if args.report:
        _write(args.report, report.to_json())
    if result.promise_violation is not None:
        return EXIT_PROMISE
    return EXIT_OK if report.ok else EXIT_CHECK


def cmd_audit(args) -> int:
    stream = _load_stream(args.input)
    result = _load_result(args.result)
    trace = _load_trace(args.trace)
    try:
        report = verify_audit(stream, trace, config_for(result), args.level)
    except ValueError as exc:
        raise CliError(f"files do not match: {exc}", EXIT_MALFORMED) from None
    print(report.summary())
    if args.report:
        _write(args.report, report.to_json())
    return EXIT_OK if report.ok else EXIT_CHECK


def cmd_bench(args) -> int:
    try:
        rows = harness.bench(_read(args.suite), jobs=args.jobs, timing=args.timing)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_MALFORMED) from None
    _write(args.csv, harness.rows_to_csv(rows))
    if args.json:
        _write(args.json, harness.rows_to_json(rows))
    bad = [r for r in rows if r.status != "ok"]
    for r in bad:
        print(f"row {r.spec} [{r.algorithm} k={r.k}]: {r.status}", file=sys.stderr)
    return EXIT_OK if not bad else EXIT_CHECK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="girthcolor",
                                     description="Online coloring of graphs with large odd girth.")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[harness.gen_parser(exit_on_error=False)],
                       conflict_handler="resolve", help="write a generated instance")
    g.add_argument("-o", "--output", default=None, help="output path (default stdout)")
    g.set_defaults(func=cmd_gen)

    r = sub.add_parser("run", help="color an instance online")
    r.add_argument("input")
    r.add_argument("--algo", choices=ALGORITHMS, default="layered")
    r.add_argument("--k", type=int, default=0)
    r.add_argument("--out", help="RunResult JSON path")
    r.add_argument("--audit", help="audit trace JSON-lines path")
    r.add_argument("--unknown-n", action="store_true", help="hide n and use guess doubling")
    r.add_argument("--n0", type=int, default=4, help="first guess for --unknown-n")
    r.add_argument("--c", type=int, help="override the First-Fit width")
    r.add_argument("--delta", help="override the group-coloring degree parameter")
    r.set_defaults(func=cmd_run)

    v = sub.add_parser("verify", help="check a run result")
    v.add_argument("input")
    v.add_argument("result")
    v.add_argument("--audit", help="audit trace to check as well")
    v.add_argument("--level", choices=("basic", "full"), default="basic")
    v.add_argument("--check-odd-girth", action="store_true")
    v.add_argument("--girth", help="girth promise for first-fit bounds (integer or 'auto')")
    v.add_argument("--report", help="write the report as JSON")
    v.set_defaults(func=cmd_verify)

    a = sub.add_parser("audit", help="check an audit trace")
    a.add_argument("input")
    a.add_argument("result")
    a.add_argument("trace")
    a.add_argument("--level", choices=("basic", "full"), default="basic")
    a.add_argument("--report")
    a.set_defaults(func=cmd_audit)

    b = sub.add_parser("bench", help="run a suite and write CSV")
    b.add_argument("suite")
    b.add_argument("--csv", default=None, help="CSV output path (default stdout)")
    b.add_argument("--json", help="also write rows as JSON")
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--timing", action="store_true", help="fill wall_time_ms")
    b.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"girthcolor: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
