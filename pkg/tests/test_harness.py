import json

import pytest

from nonsep.errors import ParseError
from nonsep.harness import (
    InstanceReport,
    SweepConfig,
    load_config,
    make_tasks,
    preconditions_hold,
    run_instance,
    summarize,
    sweep,
)
from nonsep.generators import NAMED_FAMILY, complete_digraph, complete_graph, cycle_graph
from nonsep.shapes import parse_shape


def _lines(reports):
    return [r.to_json(timing=False) for r in reports]


def test_sweep_is_deterministic(tmp_path):
    cfg = dict(shapes=["os:3", "ods:5:1:2", "ps:1:4"], count=4, n_max=14, seed=7,
               witnesses=str(tmp_path))
    a = _lines(sweep(SweepConfig(**cfg)))
    b = _lines(sweep(SweepConfig(**cfg)))
    assert a == b and len(a) == 12


def test_parallel_sweep_keeps_instance_order(tmp_path):
    cfg = dict(shapes=["os:4", "star:3"], count=5, n_max=16, seed=3, witnesses=str(tmp_path))
    serial = _lines(sweep(SweepConfig(**cfg)))
    parallel = _lines(sweep(SweepConfig(**cfg, jobs=3)))
    assert serial == parallel


def test_finder_mode_finds_everything(tmp_path):
    cfg = SweepConfig(shapes=["os:3", "is:4", "ids:6:2:2", "ps:2:6", "pds2:1:6", "dstar:5:2"],
                      count=5, n_max=16, seed=1, witnesses=str(tmp_path))
    reports = sweep(cfg)
    summary = summarize(reports)
    assert summary["found"] == len(reports) == 30
    assert summary["success_rate"] == 1.0
    assert all(r.verified and r.preconditions for r in reports)


def test_named_family_sweep(tmp_path):
    cfg = SweepConfig(family="named", names=["petersen", "complete:8", "circulant:13:1,2,3,4"],
                      shapes=["star:3"], witnesses=str(tmp_path))
    reports = sweep(cfg)
    assert [r.source for r in reports] == cfg.names
    # petersen is 3-regular, below the degree bound for star:3
    assert [r.outcome for r in reports] == ["precondition-failed", "found", "found"]


def test_enumerated_family_skips_wrong_orientation(tmp_path):
    reports = sweep(SweepConfig(family="enumerated", shapes=["os:3"], witnesses=str(tmp_path)))
    assert len(reports) == len(NAMED_FAMILY)
    for r in reports:
        directed = "digraph" in r.source or "bicycle" in r.source
        if not directed:
            assert r.outcome == "precondition-failed"
    by_name = {r.source: r.outcome for r in reports}
    assert by_name["complete-digraph:6"] == "found"
    assert by_name["bicycle:8"] == "precondition-failed"  # semi-degree 2


def test_probe_mode_uses_oracle_and_dumps_witnesses(tmp_path):
    cfg = SweepConfig(shapes=["star:3"], count=6, n_max=8, seed=2, probe=True, witnesses=str(tmp_path))
    tasks = make_tasks(cfg)
    assert all(t["mode"] == "oracle" and t["delta"] == 4 for t in tasks)
    reports = sweep(cfg)
    for r in reports:
        if r.outcome == "not-found":
            dump = json.loads((tmp_path / f"instance_{r.id:05d}.json").read_text())
            assert dump["shape"] == "star:3" and r.witness


def test_empty_family_gives_no_reports():
    assert sweep(SweepConfig(family="named", names=[], shapes=["os:3"])) == []
    assert sweep(SweepConfig(shapes=[])) == []
    assert summarize([])["success_rate"] is None


def test_found_requires_verification():
    with pytest.raises(ValueError):
        InstanceReport(id=0, family="random", source="x", n=3, shape="os:1", mode="finder",
                       preconditions=True, outcome="found", verified=False)
    with pytest.raises(ValueError):
        InstanceReport(id=0, family="random", source="x", n=3, shape="os:1", mode="finder",
                       preconditions=True, outcome="maybe")


def test_config_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"shapes": ["os:3"], "colour": 1}')
    with pytest.raises(ParseError):
        load_config(bad)
    bad.write_text("[1, 2]")
    with pytest.raises(ParseError):
        load_config(bad)
    bad.write_text("{not json")
    with pytest.raises(ParseError):
        load_config(bad)
    with pytest.raises(ParseError):
        SweepConfig(family="weird")
    with pytest.raises(ParseError):
        SweepConfig(shapes=["ps:9:3"])
    good = tmp_path / "good.json"
    good.write_text('{"shapes": ["os:3"], "count": 2, "seed": 5}')
    assert load_config(good).count == 2


def test_preconditions_hold():
    assert preconditions_hold(complete_graph(9), parse_shape("ps:2:6"))
    assert not preconditions_hold(complete_graph(8), parse_shape("ps:2:6"))
    assert not preconditions_hold(cycle_graph(8), parse_shape("ps:2:6"))
    assert not preconditions_hold(complete_graph(8), parse_shape("os:3"))
    assert preconditions_hold(complete_digraph(5), parse_shape("os:3"))
    assert not preconditions_hold(complete_digraph(4), parse_shape("os:3"))


def test_run_instance_reports_contract(tmp_path):
    task = {"family": "named", "name": "complete-digraph:7", "shape": "ods:5:1:2",
            "id": 0, "mode": "finder", "probe": False, "witnesses": str(tmp_path)}
    r = run_instance(task)
    assert r.outcome == "found" and r.iterations == 0 and r.trace == [["init", 2]]
