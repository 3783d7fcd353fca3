import math

import pytest

from girthcolor.colorers import RunResult, first_fit, kierstead, layered_colorer, run
from girthcolor.generators import (gen_ff_adversary, gen_odd_cycle, gen_random_bipartite,
                                   gen_subdivided_clique)
from girthcolor.graph import InstanceStream, OnlineGraph
from girthcolor.params import LayerConfig, color_budget
from girthcolor.verify import (brute_chromatic, config_for, first_fit_girth_bound, verify_audit,
                               verify_bounds, verify_proper)

from conftest import cycle_stream, petersen_stream, random_stream
from mutations import MUTATIONS, cycle_run, kierstead_run, merge_run

PATH = InstanceStream.from_edges(4, [(0, 1), (1, 2), (2, 3)])


def test_proper_path():
    assert verify_proper(PATH, [1, 2, 1, 2]).ok


def test_improper_edge_witness():
    report = verify_proper(PATH, [1, 2, 2, 1])
    assert not report.ok
    assert report["proper"].witness == [1, 2]


def test_incomplete_coloring():
    with pytest.raises(ValueError):
        verify_proper(PATH, [1, 2])


def test_invalid_color_value():
    assert not verify_proper(PATH, [1, 2, 1, 0]).ok


@pytest.mark.parametrize("name", sorted(MUTATIONS))
def test_each_mutation_is_caught(name):
    check, mutate = MUTATIONS[name]
    stream, trace, config, coloring = mutate()
    report = verify_audit(stream, trace, config, "full", coloring=coloring)
    assert report[check].passed is False, report.summary()
    assert report[check].witness is not None


@pytest.mark.parametrize("which", [cycle_run, merge_run, kierstead_run])
def test_clean_runs_pass(which):
    stream, result, config = which()
    report = verify_audit(stream, result.audit, config, "full", coloring=result.assignment)
    assert report.ok, report.summary()


def test_full_level_skipped_for_large_instances():
    stream, result, config = kierstead_run()
    report = verify_audit(stream, result.audit, config, "full")
    assert report["even-diameter"].passed is None


def test_even_diameter_witness_pair():
    stream, trace, config, coloring = MUTATIONS["far-apart-base"][1]()
    check = verify_audit(stream, trace, config, "full", coloring)["even-diameter"]
    layer, _, pair, diam = check.witness
    assert (layer, sorted(pair), diam) == (0, [0, 15], 16)


def test_kierstead_structure_on_adversary():
    stream, result, config = kierstead_run()
    check = verify_audit(stream, result.audit, config)["kierstead-bases"]
    assert check.passed
    for e in result.audit:
        if e["event"] == "base-added":
            assert len(e["members"]) >= 20


def test_assign_order():
    stream, result, config = cycle_run()
    trace = list(result.audit)
    i, j = [k for k, e in enumerate(trace) if e["event"] == "ff-assign"][:2]
    trace[i], trace[j] = trace[j], trace[i]
    check = verify_audit(stream, trace, config)["assign-coverage"]
    assert check.passed is False and check.witness == [0]


def test_trace_stream_mismatch():
    stream, result, config = cycle_run()
    with pytest.raises(ValueError):
        verify_audit(gen_odd_cycle(5), result.audit, config)


def test_layered_audit_on_odd_cycle():
    stream, result, config = cycle_run()
    assert verify_audit(stream, result.audit, config, "full").ok


def test_first_fit_girth_bound():
    assert first_fit_girth_bound(36, 9) == 12
    assert first_fit_girth_bound(36, 5) == 2 * 6
    assert first_fit_girth_bound(36, 4) == 36
    assert first_fit_girth_bound(36, 3) == 36
    assert first_fit_girth_bound(36, None) is None


def test_bounds_first_fit_without_promise():
    s = gen_ff_adversary(200)
    report = verify_bounds(s, first_fit(s))
    assert report["bound"].passed is None
    assert "200" in report["bound"].detail


def test_bounds_kierstead():
    s = gen_ff_adversary(200)
    report = verify_bounds(s, kierstead(s))
    assert report.ok and "budget 40" in report["bound"].detail


def test_bounds_layered_subdivided_clique():
    s = gen_subdivided_clique(5, 11)
    report = verify_bounds(s, layered_colorer(s, 1))
    assert report.ok and f"budget {color_budget(1, 105)}" in report["bound"].detail


def test_bounds_catch_overspend():
    s = gen_ff_adversary(200)
    fake = RunResult("kierstead", 0, 400, list(range(1, 401)))
    report = verify_bounds(s, fake)
    assert report["bound"].passed is False and report["bound"].witness == [400, 40]
    assert report["palette"].passed is False


def test_bounds_refuse_promise_violations():
    s = gen_odd_cycle(3)
    r = layered_colorer(s, 1, LayerConfig.custom_params(3, 1, 1, 6))
    with pytest.raises(ValueError):
        verify_bounds(s, r)


def test_unknown_n_audit():
    s = gen_random_bipartite(100, 0.1, 4)
    r = run(s, "layered", 1, unknown_n=True)
    assert isinstance(config_for(r), dict)
    assert verify_audit(s, r.audit, config_for(r), "full", r.assignment).ok
    assert verify_bounds(s, r).ok


def test_report_summary_and_json():
    report = verify_proper(PATH, [1, 2, 2, 1])
    assert report.summary().startswith("[FAIL] proper")
    assert '"ok":false' in report.to_json()


def test_brute_chromatic_examples():
    assert brute_chromatic(cycle_stream(5)) == 3
    assert brute_chromatic(petersen_stream()) == 3
    assert brute_chromatic(gen_ff_adversary(5)) == 2
    assert brute_chromatic(InstanceStream.from_back_edges([[], []])) == 1
    k4 = InstanceStream.from_edges(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    assert brute_chromatic(k4) == 4
    with pytest.raises(ValueError):
        brute_chromatic(cycle_stream(21))


@pytest.mark.parametrize("seed", range(20))
def test_brute_chromatic_below_every_coloring(seed):
    s = random_stream(12, 0.3, seed)
    chi = brute_chromatic(OnlineGraph.from_stream(s))
    assert chi <= first_fit(s).colors_used
    r = kierstead(s)
    if r.complete:
        assert chi <= r.colors_used
