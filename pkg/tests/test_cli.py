from __future__ import annotations

import json

import pytest

from doubleplanes.cli import main


@pytest.fixture(scope="module")
def classify_run(tmp_path_factory):
    d = tmp_path_factory.mktemp("run")
    out = d / "report.json"
    code = main(["classify", "--format", "json", "--out", str(out), "--emit-candidates", str(d / "cands")])
    return code, json.loads(out.read_text()), d / "cands"


def test_classify_json_schema(classify_run):
    code, data, _ = classify_run
    assert code == 0
    assert {"records", "exclusions", "moduli", "plane_models", "versions"} <= set(data)
    for rec in data["records"]:
        assert {"g_F", "g_C", "group", "chi", "q", "pg", "Ksq", "k", "type", "fibres", "bicanonical"} <= set(rec)
    assert sorted(r["type"] for r in data["records"]) == ["II", "Ia", "Ib", "Ic", "Id"]


def test_every_record_reverifies(classify_run, capsys):
    _, data, cands = classify_run
    for rec in data["records"]:
        path = cands / f"{rec['type']}.txt"
        assert path.read_text() == rec["candidate_text"]
        assert main(["verify", str(path)]) == 0
        assert f"ok: type {rec['type']}" in capsys.readouterr().out


def test_verify_free_diagonal_failure(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text(
        "sphere = Dihedral(2)\nd = 4\ndelta = free free\ngroup = full\n"
        "monodromy = (0 1)(2 3)|0, ()|1/2, (0 1)(2 3)|1/2, (0 2)(1 3)|1/2 * 2\n"
    )
    assert main(["verify", str(p)]) == 1
    assert "free diagonal action" in capsys.readouterr().out


@pytest.mark.parametrize(
    "text, field",
    [
        ("sphere = Octahedral\nd = 4\ndelta = 8\ngroup = full\n", "monodromy"),
        ("sphere = Cube\nd = 4\ndelta = 8\ngroup = full\nmonodromy = (0 1)|0\n", "sphere"),
        ("sphere = Octahedral\nd = 4\ndelta = 6\ngroup = full\nmonodromy = (0 1)|0\n", "delta"),
        ("sphere = Octahedral\nd = 4\ndelta = 8\ngroup = half\nmonodromy = (0 1)|0\n", "group"),
    ],
)
def test_verify_input_errors(tmp_path, capsys, text, field):
    p = tmp_path / "c.txt"
    p.write_text(text)
    assert main(["verify", str(p)]) == 2
    assert field in capsys.readouterr().err


def test_verify_missing_file(capsys):
    assert main(["verify", "/nonexistent/candidate.txt"]) == 2


def test_plane_model_ii(capsys):
    assert main(["plane-model", "II"]) == 0
    out = capsys.readouterr().out
    assert "chi=1" in out and "K^2=-2" in out and "p_g=0 certified" in out


def test_plane_model_spec_file(tmp_path, capsys):
    p = tmp_path / "b.txt"
    p.write_text("m = 4\n")
    assert main(["plane-model", str(p), "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert (data["chi"], data["Ksq"]) == (4, 2)
    p.write_text("m = 4\npoint Q one\n")
    assert main(["plane-model", str(p)]) == 2


def test_selftest(capsys):
    assert main(["selftest"]) == 0
    assert "FAIL" not in capsys.readouterr().out


def test_bad_seed(capsys):
    assert main(["plane-model", "I", "--seed", "-1"]) == 2
