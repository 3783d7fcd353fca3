"""Acceptance criteria, one test each.

Every test records a ``[PASS]``/``[FAIL]`` line (printed at the end of the
run by the terminal-summary hook in conftest) and fails if the criterion's
time limit is exceeded.
"""

import contextlib
import itertools
import math
import time
from pathlib import Path

import pytest

from girthcolor.cli import main
from girthcolor.colorers import first_fit, kierstead, layered_colorer
from girthcolor.generators import (gen_ff_adversary, gen_odd_cycle, gen_random_bipartite,
                                   gen_subdivided_clique, reorder)
from girthcolor.graph import InstanceStream, OnlineGraph
from girthcolor.params import (LayerConfig, ceil_pow, color_budget, even_diameter_cap,
                               g_req)
from girthcolor.parity import (even_distance, odd_girth, oracle_even_distance,
                               oracle_odd_girth)
from girthcolor.verify import brute_chromatic, verify_audit, verify_bounds, verify_proper

from conftest import ACCEPTANCE_LINES, cycle_stream, group_stream, petersen_stream, random_stream
from mutations import MUTATIONS
from test_groupcolor import run_checked

ROOT = Path(__file__).resolve().parent.parent


@contextlib.contextmanager
def criterion(number, title, limit):
    notes = []
    t0 = time.perf_counter()
    try:
        yield notes
        elapsed = time.perf_counter() - t0
        assert elapsed < limit, f"took {elapsed:.2f} s, limit {limit} s"
    except BaseException as exc:
        elapsed = time.perf_counter() - t0
        ACCEPTANCE_LINES.append(f"[FAIL] {number:>2}. {title} ({elapsed:.2f} s): {exc}")
        print(ACCEPTANCE_LINES[-1])
        raise
    detail = "; ".join(notes)
    ACCEPTANCE_LINES.append(f"[PASS] {number:>2}. {title} ({elapsed:.2f} s < {limit} s)"
                            + (f": {detail}" if detail else ""))
    print(ACCEPTANCE_LINES[-1])


def proper(stream, result):
    return result.complete and verify_proper(stream, result.assignment).ok


# The instances of criterion 4: odd cycles at g_req(k) + 2 and subdivided
# cliques with 3t >= g_req(k), in given and random arrival orders.
def layered_instances():
    out = []
    for k, (m, t), extra in ((1, (5, 11), (12, 11)), (2, (4, 47), (6, 47))):
        out.append((k, f"odd-cycle {g_req(k) + 2}", gen_odd_cycle(g_req(k) + 2)))
        base = gen_subdivided_clique(m, t)
        out.append((k, f"subdivided-clique ({m},{t})", base))
        for seed in (1, 2):
            out.append((k, f"subdivided-clique ({m},{t}) order {seed}", reorder(base, seed)))
        out.append((k, f"subdivided-clique {extra}", reorder(gen_subdivided_clique(*extra), 3)))
    return out


_RUNS = {}


def layered_runs():
    if not _RUNS:
        for k, label, stream in layered_instances():
            _RUNS[(k, label)] = (stream, layered_colorer(stream, k))
    return _RUNS


def test_c01_first_fit_adversary():
    with criterion(1, "first-fit on the adversary uses exactly m colors", 1.0) as notes:
        for m in (1, 3, 50, 200):
            used = first_fit(gen_ff_adversary(m)).colors_used
            assert used == m, f"m={m}: {used} colors"
        notes.append("m in {1,3,50,200} -> m colors")


def test_c02_kierstead_bound():
    with criterion(2, "kierstead stays within 2*ceil(sqrt n) = 40", 5.0) as notes:
        streams = [gen_ff_adversary(200)]
        streams += [gen_random_bipartite(400, p, seed) for p in (0.05, 0.2) for seed in range(10)]
        worst = 0
        for s in streams:
            r = kierstead(s)
            assert proper(s, r)
            assert r.colors_used <= 2 * ceil_pow(400, 1, 2) == 40, r.colors_used
            worst = max(worst, r.colors_used)
        notes.append(f"{len(streams)} instances, max {worst} colors")


def test_c03_group_coloring_budget():
    with criterion(3, "group coloring uses at most delta^2 + 2 colors", 30.0) as notes:
        for delta in (0, 1, 2, 3, 5):
            worst = 0
            for seed in range(1000):
                gc = run_checked(delta, group_stream(delta, seed, groups=16, length=80))
                worst = max(worst, gc.max_color_used())
            assert worst <= delta * delta + 2, (delta, worst)
            notes.append(f"delta={delta}: max {worst} <= {delta * delta + 2}")


def test_c04_layered_budget():
    with criterion(4, "layered k=1,2 proper and within color_budget(k, n)", 60.0) as notes:
        for (k, label), (stream, r) in layered_runs().items():
            assert stream.n <= 2000
            assert odd_girth(stream) >= g_req(k), label
            assert proper(stream, r), label
            budget = color_budget(k, stream.n)
            assert r.colors_used <= budget, (label, r.colors_used, budget)
            assert verify_bounds(stream, r).ok
        notes.append(f"{len(_RUNS)} runs, max ratio "
                     f"{max(r.colors_used / color_budget(k, s.n) for (k, _), (s, r) in _RUNS.items()):.4f}")


def test_c05_structural_audits():
    with criterion(5, "full structural audits on the n <= 300 runs", 120.0) as notes:
        assert [even_diameter_cap(level) for level in (1, 2)] == [24, 134]
        audited = default_merges = 0
        for (k, label), (stream, r) in layered_runs().items():
            if stream.n > 300:
                continue
            report = verify_audit(stream, r.audit, LayerConfig.default(stream.n, k), "full",
                                  coloring=r.assignment)
            assert report.ok, f"{label}: {report.summary()}"
            assert report["even-diameter"].passed is True
            audited += 1
            default_merges += sum(e["event"] == "merge" for e in r.audit)
        notes.append(f"{audited} default-parameter runs with {default_merges} merges")
        # merges only happen once the degree gate is small, so force them
        merges = 0
        for k in (1, 2):
            for seed in range(3):
                s = gen_random_bipartite(200, 0.05, seed)
                cfg = LayerConfig.custom_params(200, k, 2, 1)
                r = layered_colorer(s, k, cfg)
                assert proper(s, r)
                report = verify_audit(s, r.audit, cfg, "full", coloring=r.assignment)
                assert report.ok, report.summary()
                merges += sum(e["event"] == "merge" for e in r.audit)
        assert merges > 0
        notes.append(f"6 forced-merge runs with {merges} merges")


def test_c06_threshold_arithmetic():
    with criterion(6, "g_req and the a_l recurrence", 1.0) as notes:
        assert [g_req(k) for k in range(4)] == [7, 29, 139, 689]
        a = 2
        for level in range(11):
            assert even_diameter_cap(level) == a
            assert 2 * a == 11 * 5**level - 7
            a = 5 * a + 14
        notes.append("g_req = 7, 29, 139, 689; closed form holds for l <= 10")


def test_c07_first_fit_girth():
    with criterion(7, "first-fit on subdivided_clique(6,3) uses <= 12 colors", 5.0) as notes:
        base = gen_subdivided_clique(6, 3)
        bound = 4 * ceil_pow(36, 1, 4)
        assert (base.n, odd_girth(base), bound) == (36, 9, 12)
        worst = first_fit(base).colors_used
        for seed in range(50):
            worst = max(worst, first_fit(reorder(base, seed)).colors_used)
        assert worst <= bound
        notes.append(f"given order + 50 random orders, max {worst}")


def test_c08_oracle_agreement():
    with criterion(8, "parity BFS agrees with the walk oracles", 30.0) as notes:
        for seed in range(200):
            n = 3 + seed % 10
            g = OnlineGraph.from_stream(random_stream(n, (0.15, 0.3, 0.5)[seed % 3], seed))
            assert odd_girth(g) == oracle_odd_girth(g), seed
            for s, t in itertools.product(range(n), repeat=2):
                assert even_distance(g, s, t) == oracle_even_distance(g, s, t), (seed, s, t)
        assert brute_chromatic(cycle_stream(5)) == 3
        assert brute_chromatic(petersen_stream()) == 3
        notes.append("200 graphs, chi(C5) = chi(Petersen) = 3")


def test_c09_promise_violation_safety():
    with criterion(9, "short odd cycles never get improper colors; mutations caught",
                   5.0) as notes:
        outcomes = {"proper": 0, "violation": 0}
        for n, edges in ((5, [(i, (i + 1) % 5) for i in range(5)]), (3, [(0, 1), (1, 2), (0, 2)])):
            for perm in itertools.permutations(range(n)):
                pos = {v: i for i, v in enumerate(perm)}
                s = InstanceStream.from_edges(n, [(pos[a], pos[b]) for a, b in edges])
                for cfg in (None, LayerConfig.custom_params(n, 1, 1, 6)):
                    r = layered_colorer(s, 1, cfg)
                    if r.promise_violation is None:
                        assert proper(s, r)
                        outcomes["proper"] += 1
                    else:
                        pv = r.promise_violation
                        assert pv["vertex"] is not None and pv["conflicting_neighbor"] is not None
                        assert pv["reason"]
                        prefix = InstanceStream(len(r.assignment), s.events[:len(r.assignment)])
                        assert verify_proper(prefix, r.assignment).ok
                        outcomes["violation"] += 1
        notes.append(f"{outcomes['proper']} proper, {outcomes['violation']} diagnosed")
        for name, (check, mutate) in sorted(MUTATIONS.items()):
            stream, trace, config, coloring = mutate()
            report = verify_audit(stream, trace, config, "full", coloring=coloring)
            assert report[check].passed is False, name
        notes.append(f"{len(MUTATIONS)} mutations caught")


def test_c10_determinism(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    suite = str(ROOT / "demos" / "bench_suite.txt")
    with criterion(10, "bench pipeline is byte-identical across runs", 60.0) as notes:
        assert main(["bench", suite, "--csv", "a.csv", "--json", "a.json"]) == 0
        assert main(["bench", suite, "--csv", "b.csv", "--json", "b.json", "--jobs", "2"]) == 0
        for ext in ("csv", "json"):
            assert (tmp_path / f"a.{ext}").read_bytes() == (tmp_path / f"b.{ext}").read_bytes()
        rows = (tmp_path / "a.csv").read_text().count("\n") - 1
        notes.append(f"{rows} rows, serial and 2-process runs identical")
