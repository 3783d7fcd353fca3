"""Pipelines behind the command line: generate, run, verify and benchmark.

Bench suites are text files with one run per line::

    # algo  k  generator options
    first-fit  0  --kind ff-adversary --m 200
    kierstead  0  --kind ff-adversary --m 200
    layered    1  --kind subdivided-clique --m 5 --t 11 --order random --seed 7

The CSV written by :func:`bench` has the columns in :data:`BENCH_COLUMNS`;
``wall_time_ms`` stays empty unless timing is requested, so repeated runs
produce identical bytes.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import math
import os
import shlex
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from . import generators
from .colorers import RunResult, run as run_colorer
from .graph import InstanceStream, OnlineGraph, save_instance
from .params import g_req
from .parity import girth, odd_girth
from .verify import (AuditReport, brute_chromatic, config_for, first_fit_girth_bound,
                     run_budget, verify_audit, verify_bounds, verify_proper)

SEED_ENV = "GIRTHCOLOR_SEED"
GIRTH_MAX_N = 2000
BENCH_COLUMNS = ("instance_id", "spec", "n", "odd_girth", "algorithm", "k", "colors_used",
                 "budget", "budget_ratio", "chromatic", "wall_time_ms", "status")


def default_seed() -> int:
    return int(os.environ.get(SEED_ENV, "0"))


def gen_parser(prog="gen", exit_on_error=True) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog=prog, add_help=exit_on_error, exit_on_error=exit_on_error)
    p.add_argument("--kind", required=True, choices=generators.KINDS)
    p.add_argument("--m", type=int)
    p.add_argument("--g", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--order", choices=("given", "random"), default="given")
    p.add_argument("--seed", type=int, default=None)
    return p


def spec_kwargs(ns: argparse.Namespace) -> dict:
    kw = {k: getattr(ns, k) for k in ("m", "g", "t", "n", "p", "order", "seed")}
    if kw["seed"] is None:
        kw["seed"] = default_seed()
    return kw


def spec_string(kind: str, kw: dict) -> str:
    parts = [f"--kind {kind}"]
    for key in ("m", "g", "t", "n", "p"):
        if kw.get(key) is not None:
            parts.append(f"--{key} {kw[key]}")
    if kw.get("order", "given") != "given" or kind == "random-bipartite":
        parts.append(f"--order {kw.get('order', 'given')} --seed {kw['seed']}")
    return " ".join(parts)


def generate_text(kind: str, **kw) -> tuple[InstanceStream, str]:
    stream = generators.generate(kind, **kw)
    return stream, save_instance(stream, comments=[f"gen {spec_string(kind, kw)}"])


def check_odd_girth(stream: InstanceStream, run: RunResult | None) -> AuditReport:
    report = AuditReport()
    og = odd_girth(stream)
    shown = "inf" if og == math.inf else int(og)
    if run is None or run.algorithm == "first-fit":
        report.add("odd-girth", True, f"odd girth {shown}")
        return report
    need = g_req(run.k or 0)
    ok = og >= need
    report.add("odd-girth", ok, f"odd girth {shown} {'>=' if ok else '<'} required {need}",
               witness=None if ok else [shown, need])
    return report


def verify_all(stream: InstanceStream, run: RunResult, trace: list[dict] | None = None,
               level: str = "basic", check_girth: bool = False,
               ff_girth=None) -> AuditReport:
    """Every check that applies to ``run``; promise violations are reported, not checked."""
    report = AuditReport()
    if run.promise_violation is not None:
        pv = run.promise_violation
        report.add("promise", False, pv.get("reason", "promise violation"),
                   witness=[pv.get("vertex"), pv.get("conflicting_neighbor")])
        if check_girth:
            report.extend(check_odd_girth(stream, run))
        return report
    report.extend(verify_proper(stream, run.assignment))
    report.extend(verify_bounds(stream, run, girth=ff_girth))
    if trace is not None:
        report.extend(verify_audit(stream, trace, config_for(run), level,
                                   coloring=run.assignment))
    if check_girth:
        report.extend(check_odd_girth(stream, run))
    return report


@dataclass
class BenchRow:
    instance_id: str
    spec: str
    n: int
    odd_girth: str
    algorithm: str
    k: int
    colors_used: int
    budget: str
    budget_ratio: str
    chromatic: str
    wall_time_ms: str
    status: str


def parse_suite(text: str) -> list[tuple[str, int, str, dict]]:
    rows = []
    parser = gen_parser("suite", exit_on_error=False)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = shlex.split(line)
        if len(tokens) < 3:
            raise ValueError(f"suite line {lineno}: expected '<algo> <k> <gen options>'")
        algo, k = tokens[0], int(tokens[1])
        try:
            ns = parser.parse_args(tokens[2:])
        except (argparse.ArgumentError, SystemExit) as exc:
            raise ValueError(f"suite line {lineno}: {exc}") from None
        kw = spec_kwargs(ns)
        rows.append((algo, k, ns.kind, kw))
    return rows


def bench_row(entry, timing: bool = False) -> BenchRow:
    algo, k, kind, kw = entry
    stream, text = generate_text(kind, **kw)
    instance_id = hashlib.sha256(text.split("\n", 1)[1].encode()).hexdigest()[:12]
    small = stream.n <= GIRTH_MAX_N
    og = odd_girth(stream) if small else None
    t0 = time.perf_counter()
    result = run_colorer(stream, algo, k)
    elapsed = (time.perf_counter() - t0) * 1000.0
    gr = girth(stream) if (algo == "first-fit" and small) else None
    if result.promise_violation is not None:
        status, budget = "promise-violation", None
    else:
        report = verify_all(stream, result, result.audit, ff_girth=gr)
        status = "ok" if report.ok else "fail"
        budget = first_fit_girth_bound(stream.n, gr) if algo == "first-fit" \
            else run_budget(result)
    ratio = "" if not budget else f"{result.colors_used / budget:.4f}"
    chrom = str(brute_chromatic(OnlineGraph.from_stream(stream))) if stream.n <= 20 else ""
    return BenchRow(
        instance_id=instance_id,
        spec=spec_string(kind, kw),
        n=stream.n,
        odd_girth="" if og is None else ("inf" if og == math.inf else str(int(og))),
        algorithm=algo,
        k=k,
        colors_used=result.colors_used,
        budget="" if budget is None else str(budget),
        budget_ratio=ratio,
        chromatic=chrom,
        wall_time_ms=f"{elapsed:.3f}" if timing else "",
        status=status,
    )


def bench(suite_text: str, jobs: int = 1, timing: bool = False) -> list[BenchRow]:
    entries = parse_suite(suite_text)
    if jobs > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(bench_row, entries, [timing] * len(entries)))
    return [bench_row(e, timing) for e in entries]


def rows_to_csv(rows: list[BenchRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(BENCH_COLUMNS)
    for row in rows:
        d = asdict(row)
        writer.writerow([d[c] for c in BENCH_COLUMNS])
    return buf.getvalue()


def rows_to_json(rows: list[BenchRow]) -> str:
    return json.dumps([asdict(r) for r in rows], indent=1) + "\n"
