import json
import re

import pytest

from tricross.cli import main
from tricross.constructions import build, realize_geometric
from tricross.model import TABLES, Edge, GeometricDrawing, TripartiteLabels
from tricross.serialize import dumps


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_formula(capsys):
    assert run(capsys, "formula", "k22n", "--n", "5")[:2] == (0, "31\n")
    assert run(capsys, "formula", "knn2", "--n", "4")[:2] == (0, "16\n")
    assert run(capsys, "formula", "kmn2", "--m", "2", "--n", "4")[:2] == (0, "2\n")
    assert run(capsys, "formula", "cn", "--n", "5")[:2] == (0, "24\n")


def test_formula_json(capsys):
    code, out, _ = run(capsys, "formula", "k22n", "--n", "6", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"schema": 1, "formula": "k22n", "inputs": {"n": 6}, "value": 45}


def test_formula_errors(capsys):
    code, _, err = run(capsys, "formula", "k22n", "--n", "2")
    assert code == 2 and "n must be >= 3" in err
    assert run(capsys, "formula", "kmn2", "--n", "4")[0] == 2
    assert run(capsys, "formula", "kmn2", "--m", "3", "--n", "4")[0] == 2


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        main(["formula", "nope", "--n", "3"])
    assert info.value.code == 2


def test_construct_writes_files(capsys, tmp_path):
    svg = tmp_path / "out.svg"
    labels = tmp_path / "labels.json"
    code, out, _ = run(
        capsys, "construct", "--n", "3", "--variant", "type1", "--svg", str(svg),
        "--out", str(tmp_path / "d"), "--emit-labels", str(labels),
    )
    assert code == 0
    assert out.splitlines()[0] == "construction_count 9"
    assert out.splitlines()[1].startswith("geometric_count 9 (red_red 1")
    assert svg.read_text().count("<path ") == 16
    assert (tmp_path / "d" / "spec.json").exists()
    assert (tmp_path / "d" / "drawing.json").exists()
    assert run(capsys, "count", str(labels))[:2] == (0, "9\n")
    code, out, _ = run(capsys, "count", str(tmp_path / "d" / "drawing.json"))
    assert code == 0 and out.splitlines()[0] == "9"


def test_construct_type4(capsys):
    code, out, _ = run(capsys, "construct", "--n", "5", "--variant", "type4")
    assert code == 0 and out.splitlines()[0] == "construction_count 31"
    code, _, err = run(capsys, "construct", "--n", "4", "--variant", "type4")
    assert code == 2 and "odd" in err


def test_construct_beyond_geometric_limit(capsys):
    code, out, _ = run(capsys, "construct", "--n", "20", "--geometric-limit", "16")
    assert code == 0 and "geometric skipped" in out


def test_construct_is_deterministic(capsys, tmp_path):
    outs = []
    for k in range(2):
        path = tmp_path / f"{k}.svg"
        outs.append(run(capsys, "construct", "--n", "6", "--svg", str(path))[1] + path.read_text())
    assert outs[0] == outs[1]


def test_count_k111(capsys, tmp_path):
    tables = {name: (1,) for name in TABLES}
    path = tmp_path / "k111.json"
    path.write_text(dumps(TripartiteLabels(1, 1, 1, tables)))
    assert run(capsys, "count", str(path))[:2] == (0, "0\n")


def test_count_corrupted(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"schema": 1, "kind": "geometric", "circles": [')
    assert run(capsys, "count", str(path))[0] == 2
    assert run(capsys, "count", str(tmp_path / "missing.json"))[0] == 2


def test_count_non_simple_names_pair(capsys, tmp_path):
    d = realize_geometric(build(3, "type1"))
    # reroute N2-P2 through the bend point of M2-P2; the drawing stops being simple
    w = next(e.waypoints[0] for e in d.edges if (e.u, e.v) == ("M2", "P2"))
    edges = [Edge(e.u, e.v, (w,)) if (e.u, e.v) == ("N2", "P2") else e for e in d.edges]
    path = tmp_path / "touch.json"
    path.write_text(dumps(GeometricDrawing(d.circles, d.vertices, edges, d.parts)))
    code, _, err = run(capsys, "count", str(path))
    assert code == 3
    assert re.search(r"edges \S+ and \S+", err) and "N2-P2" in err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--from", "3", "--to", "6")
    assert code == 0
    assert all(line.rstrip().endswith("yes") for line in out.splitlines()[2:])


def test_verify_lb_limit(capsys):
    code, out, _ = run(capsys, "verify", "--from", "3", "--to", "12", "--lb-max", "7", "--checks", "lb", "--format", "csv")
    assert code == 0
    rows = out.splitlines()[1:]
    assert [r.split(",")[4] for r in rows] == ["9", "17", "31", "45", "65"] + ["skipped"] * 5


def test_verify_threeterms_to_30(capsys):
    code, out, _ = run(capsys, "verify", "--checks", "threeterms", "--from", "3", "--to", "30", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == 1 and doc["pass"] and len(doc["rows"]) == 28


def test_verify_failure_exit_code(capsys, monkeypatch):
    from tricross import verify

    def failing(n, cap):
        return verify.VerificationReport(n, "ys", 1, False, [("i", 1, 1, 1, 1)], details={"failures": 1})

    monkeypatch.setitem(verify._LEMMAS, "ys", failing)
    code, out, _ = run(capsys, "verify", "--from", "3", "--to", "3", "--checks", "ys")
    assert code == 1 and "FAIL(1)" in out


def test_verify_jobs_identical(capsys, tmp_path):
    a = run(capsys, "verify", "--from", "3", "--to", "8", "--jobs", "1", "--format", "csv")[1]
    b = run(capsys, "verify", "--from", "3", "--to", "8", "--jobs", "4", "--format", "csv")[1]
    assert a == b


def test_sweep_writes_csv(capsys, tmp_path):
    path = tmp_path / "s.csv"
    code, out, _ = run(capsys, "sweep", "--from", "4", "--to", "5", "--csv", str(path))
    assert code == 0
    lines = path.read_text().splitlines()
    assert lines[1].startswith("4,17,17,n even: undefined")
    assert "n even: undefined" in out


def test_bad_check_name(capsys):
    assert run(capsys, "verify", "--checks", "bogus")[0] == 2


def test_oracle(capsys):
    assert run(capsys, "oracle", "--n", "4", "--xi", "1", "--xj", "3")[:2] == (0, "1 3 oracle=2 f=2\n")
    code, out, _ = run(capsys, "oracle", "--n", "6", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["agree"] and len(doc["pairs"]) == 36
    assert run(capsys, "oracle", "--n", "4", "--xi", "1")[0] == 2
