import json
import subprocess
import sys

import pytest

from modext import cli, decomposition
from modext.formats import algebra_doc, dumps
from modext.instances import matrix_upper


@pytest.fixture
def t2(tmp_path):
    path = tmp_path / "t2.json"
    path.write_text(dumps(algebra_doc(matrix_upper(2))))
    return str(path)


def records(capsys):
    return [json.loads(line) for line in capsys.readouterr().out.splitlines() if line]


def test_validate(t2, capsys):
    assert cli.main(["validate", t2]) == 0
    assert "associative, unital" in capsys.readouterr().out


def test_validate_reports_failure(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"type": "algebra", "name": "B", "dim": 2, "mult": [[0, 0, 1, "1"], [1, 0, 0, "1"]]}))
    assert cli.main(["validate", str(bad), "--format", "json-lines"]) == 1
    rec = records(capsys)[0]
    assert not rec["ok"] and "associativity" in " ".join(rec["axioms_failed"])


def test_h1(t2, capsys):
    assert cli.main(["h1", t2, "--dual-level", "0", "--format", "json-lines"]) == 0
    rec = records(capsys)[0]
    assert (rec["derivation_dim"], rec["inner_dim"], rec["h1_dim"]) == (2, 2, 0)
    assert rec["schema_version"] == cli.SCHEMA_VERSION


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"type": "algebra",\n')
    assert cli.main(["validate", str(bad)]) == 2
    assert "line" in capsys.readouterr().err


def test_usage_errors(t2, capsys):
    assert cli.main(["h1", "/nonexistent.json"]) == 2
    assert cli.main(["h1", t2, "--dual-level", "99"]) == 2
    assert cli.main(["frobnicate"]) == 2
    assert cli.main(["check", "--theorem", "cor-lau-odd", "--instance", t2]) == 2


def test_construct_and_dual(corpus_files, capsys):
    f = [p for p in corpus_files if p.endswith("t2-on-t2.json")][0]
    assert cli.main(["construct", f, "--format", "json-lines"]) == 0
    rec = records(capsys)[0]
    assert rec["dim"] == 6 and rec["associative"] and rec["blocks_ok"]
    assert cli.main(["dual", f, "--level", "3", "--format", "json-lines"]) == 0
    assert records(capsys)[0]["block_formula_matches_direct_dual"]


def test_decompose(corpus_files, capsys):
    f = [p for p in corpus_files if p.endswith("z2-on-z2.json")][0]
    assert cli.main(["decompose", f, "--dual-level", "1", "--format", "json-lines"]) == 0
    recs = records(capsys)
    assert all(r["round_trip"] for r in recs[:-1])
    assert any(not r["inner"] for r in recs[:-1])
    assert recs[-1]["h1_dim"] == sum(1 for r in recs[:-1]) - recs[-1]["inner_dim"]


def test_lemma_violation_exit_code(corpus_files, monkeypatch, capsys):
    def boom(*a, **k):
        raise decomposition.LemmaViolation("injected", "a")
    monkeypatch.setattr(decomposition, "decompose", boom)
    f = [p for p in corpus_files if p.endswith("t2-on-t2.json")][0]
    assert cli.main(["decompose", f]) == 3
    assert "LEMMA VIOLATION" in capsys.readouterr().err


def test_check(corpus_files, capsys):
    f = [p for p in corpus_files if p.endswith("t2-on-t2.json")][0]
    assert cli.main(["check", "--theorem", "thm-odd", "--instance", f, "--level", "0", "--format", "json-lines"]) == 0
    rec = records(capsys)[0]
    assert rec["iff_consistent"] and rec["dual_level"] == 1 and len(rec["conditions"]) == 4
    assert cli.main(["check", "--theorem", "dgg-1.2", "--instance", f]) == 0


def test_sweep(capsys):
    from conftest import CORPUS_DIR
    args = ["sweep", "--corpus", str(CORPUS_DIR), "--theorem", "thm-odd", "--level", "0", "--format", "json-lines"]
    assert cli.main(args) == 0
    recs = records(capsys)
    assert all(r["iff_consistent"] is True for r in recs[:-1])
    assert recs[-1]["instances"] == recs[-1]["consistent"] == len(recs) - 1


def test_sweep_parallel_is_deterministic(capsys):
    from conftest import CORPUS_DIR
    args = ["sweep", "--corpus", str(CORPUS_DIR), "--theorem", "cor-zhang-even", "--level", "0",
            "--format", "json-lines"]
    assert cli.main(args) == 0
    serial = capsys.readouterr().out
    assert cli.main(args + ["--jobs", "2"]) == 0
    assert capsys.readouterr().out == serial


def test_pin_compare(capsys):
    assert cli.main(["pin", "--format", "json-lines"]) == 0
    rec = records(capsys)[0]
    assert rec["mismatched"] == [] and rec["missing"] == []


def test_module_entry_point(t2):
    r = subprocess.run([sys.executable, "-m", "modext", "h1", t2], capture_output=True, text=True)
    assert r.returncode == 0 and "h1_dim: 0" in r.stdout
