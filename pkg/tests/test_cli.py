import json

import pytest

from coeven.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, [json.loads(line) for line in out.splitlines() if line.startswith("{")], out


def test_solve_from_file(tmp_path, capsys):
    f = tmp_path / "in.g6"
    f.write_text("Bw\n")
    code, recs, _ = run(capsys, "solve", "-i", str(f))
    assert code == 0
    expected = {"n": 3, "gamma": 1, "gamma_coe": 1, "certificate": [0]}
    assert {k: recs[0][k] for k in expected} == expected


def test_solve_reports_bad_lines_and_continues(tmp_path, capsys):
    f = tmp_path / "in.g6"
    f.write_text(">>graph6<<A_\nB!\n\nBw\n")
    code, recs, _ = run(capsys, "solve", "-i", str(f))
    assert code == 1
    assert [r["line"] for r in recs] == [1, 2, 4]
    assert "error" in recs[1] and recs[2]["gamma_coe"] == 1


def test_solve_cap(capsys):
    code, recs, _ = run(capsys, "solve", "-g", "Bw", "--cap", "2")
    assert code == 1 and "cap" in recs[0]["error"]


def test_audit_exit_code(capsys):
    code, recs, _ = run(capsys, "audit", "-g", "Bw", "--op", "edge-contraction")
    assert code == 2
    assert len(recs) == 3 and not any(r["holds_upper"] for r in recs)
    code, recs, _ = run(capsys, "audit", "-g", "Bw", "--op", "edge-contraction", "--violations-only")
    assert code == 2 and {r["relation"] for r in recs} == {"upper-violation"}
    code, _, _ = run(capsys, "audit", "-g", "Cl", "--op", "vertex-removal")
    assert code == 0


def test_errors_beat_violations(capsys):
    code, _, _ = run(capsys, "audit", "-g", "Bw", "-g", "B!", "--op", "edge-contraction")
    assert code == 1


def test_gen(capsys, tmp_path):
    code, _, out = run(capsys, "gen", "--model", "all", "--n", "3")
    assert code == 0 and len(out.split()) == 8
    code, _, a = run(capsys, "gen", "--model", "gnp", "--n", "12", "--p", "0.3", "--seed", "5", "--limit", "3")
    _, _, b = run(capsys, "gen", "--model", "gnp", "--n", "12", "--p", "0.3", "--seed", "5", "--limit", "3")
    assert a == b and len(a.split()) == 3


def test_transform_and_lift(capsys):
    code, recs, _ = run(capsys, "transform", "-g", "Bw", "--op", "edge-contraction", "--edge", "0,1")
    assert code == 0 and recs[0]["result"] == "A_" and recs[0]["merged_into"] == 0
    code, recs, _ = run(capsys, "lift", "-g", "Bw", "--op", "edge-contraction", "--edge", "0,1", "--cert", "0")
    assert code == 0 and recs[0]["valid"] is False
    code, recs, _ = run(capsys, "lift", "-g", "Cl", "--op", "vertex-removal", "--vertex", "3", "--direction", "backward")
    assert recs[0]["valid"] and recs[0]["within_bound"]
    code, _, _ = run(capsys, "lift", "-g", "Cl", "--op", "vertex-removal", "--vertex", "0", "--cert", "0")
    assert code == 1


def test_transform_needs_element(capsys):
    assert main(["transform", "-g", "Bw", "--op", "vertex-removal"]) == 1
    assert main(["transform", "-g", "Bw"]) == 1


def test_witness(capsys):
    code, recs, _ = run(capsys, "witness", "--op", "edge-contraction", "--relation", "upper-equality",
                        "--family", "double-star-3-3")
    assert code == 0 and recs[0]["values"]["base"] == recs[0]["values"]["transformed"] == 6
    code, recs, _ = run(capsys, "witness", "--op", "vertex-removal", "--relation", "base-equality", "-g", "Cl",
                        "--limit", "2")
    assert len(recs) == 2
    assert main(["witness", "--op", "vertex-removal", "--relation", "mid-equality", "-g", "Cl"]) == 1


def test_survey(capsys):
    code, recs, _ = run(capsys, "survey", "--n", "5")
    assert code == 0 and recs[0]["max_n"] == 5


def test_output_file_is_deterministic(tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    for path in (a, b):
        assert main(["audit", "-g", "Cl", "-g", "Bw", "-o", str(path)]) == 2
    assert a.read_bytes() == b.read_bytes()


def test_parallel_matches_serial(tmp_path):
    src = tmp_path / "in.g6"
    assert main(["gen", "--model", "all", "--n", "4", "-o", str(src)]) == 0
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    main(["audit", "-i", str(src), "-o", str(a)])
    main(["audit", "-i", str(src), "-o", str(b), "--jobs", "2"])
    assert a.read_bytes() == b.read_bytes()


def test_bad_flag():
    assert main(["frobnicate"]) == 1
