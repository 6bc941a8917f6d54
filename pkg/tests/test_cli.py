import json

import pytest

from nonsep.cli import main
from nonsep.generators import complete_graph, cycle_graph
from nonsep.graph import format_edge_list


@pytest.fixture
def k8(tmp_path):
    path = tmp_path / "k8.txt"
    path.write_text(format_edge_list(complete_graph(8)))
    return str(path)


def test_find_exit_ok(k8, capsys):
    assert main(["find", "--input", k8, "--shape", "ps:2:5"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["verified"] is True and len(out["map"]) == 5


def test_find_then_verify(k8, capsys):
    main(["find", "-i", k8, "-s", "dstar:5:2"])
    mapping = json.loads(capsys.readouterr().out)["map"]
    assert main(["verify", "-i", k8, "-s", "dstar:5:2", "--map", ",".join(map(str, mapping))]) == 0


def test_verify_reports_separating_map(tmp_path, capsys):
    path = tmp_path / "c6.txt"
    path.write_text(format_edge_list(cycle_graph(6)))
    assert main(["verify", "-i", str(path), "-s", "path:2", "-m", "0 1", "--k", "1"]) == 0
    assert main(["verify", "-i", str(path), "-s", "path:2", "-m", "0 1"]) == 2  # leaves a path
    assert main(["verify", "-i", str(path), "-s", "path:3", "-m", "0 1 2"]) == 2
    assert main(["verify", "-i", str(path), "-s", "path:2", "-m", "0 3"]) == 3


def test_malformed_file(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("this is not\nan edge list\n")
    assert main(["find", "-i", str(path), "-s", "ps:2:5"]) == 3
    assert main(["find", "-i", str(tmp_path / "missing.txt"), "-s", "ps:2:5"]) == 3


def test_degree_deficient_input(tmp_path):
    path = tmp_path / "c6.txt"
    path.write_text(format_edge_list(cycle_graph(6)))
    assert main(["find", "-i", str(path), "-s", "star:3"]) == 1


def test_bad_arguments(k8):
    assert main(["find", "-i", k8, "-s", "ps:9:5"]) == 3
    assert main(["find", "-i", k8, "-s", "ps:2:5", "--k", "3"]) == 3
    assert main(["frobnicate"]) == 3
    assert main([]) == 3


def test_oracle_command(k8, capsys):
    assert main(["oracle", "-i", k8, "-s", "star:5", "--exact"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["found"] and out["preconditions"] and out["shapes"] == ["star:5"]
    assert main(["oracle", "-i", k8, "-s", "star:7"]) == 2


def test_gen_round_trip(tmp_path, capsys):
    out = tmp_path / "g.txt"
    assert main(["gen", "--n", "12", "--delta", "7", "--seed", "3", "-o", str(out)]) == 0
    assert main(["find", "-i", str(out), "-s", "ps:2:5"]) == 0
    assert main(["gen", "--n", "10", "--delta", "4", "--directed", "--seed", "1"]) == 0
    assert capsys.readouterr().out
    assert main(["gen", "--n", "4", "--delta", "5"]) == 3
    assert main(["gen", "--n", "4"]) == 3


def test_sweep_command(tmp_path, capsys):
    out = tmp_path / "r.jsonl"
    code = main(["sweep", "-s", "os:3", "-s", "ps:1:4", "--count", "3", "--n", "12",
                 "--witnesses", str(tmp_path / "w"), "-o", str(out)])
    assert code == 0
    rows = [json.loads(line) for line in out.read_text().splitlines()]
    assert len(rows) == 6 and all(r["outcome"] == "found" for r in rows)
    summary = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert summary["found"] == 6


def test_sweep_config_file(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"shapes": ["is:3"], "count": 2, "n_max": 9, "witnesses": None}))
    assert main(["sweep", "--config", str(cfg), "-o", str(tmp_path / "o.jsonl")]) == 0
    cfg.write_text('{"shapes": ["is:3"], "oops": true}')
    assert main(["sweep", "--config", str(cfg)]) == 3
    assert main(["sweep"]) == 3
