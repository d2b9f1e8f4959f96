from __future__ import annotations

import json
import subprocess
import sys

import pytest

from pairmds.cli import main
from pairmds.construct import build
from pairmds.errors import MalformedCodeFile
from pairmds.io import code_from_dict, code_to_dict, load_code, save_code


def test_roundtrip(tmp_path):
    C = build("3.4", 5, 5)
    save_code(C, tmp_path / "c.json")
    D = load_code(tmp_path / "c.json")
    assert D.same_code(C) and D.H == C.H and D.provenance == C.provenance


@pytest.mark.parametrize("mutate,msg", [
    (lambda d: d.pop("generator"), "missing key"),
    (lambda d: d.update(k=99), "need integers"),
    (lambda d: d["generator"][0].append(1), "entries"),
    (lambda d: d["generator"][0].__setitem__(0, 99), "element indices"),
    (lambda d: d["generator"].__setitem__(1, list(d["generator"][0])), "rank"),
    (lambda d: d["parity"][0].__setitem__(0, (d["parity"][0][0] + 1) % 5), "orthogonal"),
    (lambda d: d.update(field={"p": 6}), "bad field|not prime"),
])
def test_malformed(mutate, msg):
    d = json.loads(json.dumps(code_to_dict(build("3.4", 5, 4))))
    mutate(d)
    with pytest.raises(MalformedCodeFile, match=msg):
        code_from_dict(d)


def test_load_errors(tmp_path):
    with pytest.raises(MalformedCodeFile):
        load_code(tmp_path / "missing.json")
    (tmp_path / "bad.json").write_text("{not json")
    with pytest.raises(MalformedCodeFile):
        load_code(tmp_path / "bad.json")


def test_cli_construct_analyze(tmp_path, capsys):
    out = tmp_path / "d.json"
    assert main(["construct", "--theorem", "3.2", "--q", "7", "--n", "4", "--out", str(out)]) == 0
    assert "n=12 k=7" in capsys.readouterr().out
    rep = tmp_path / "r.json"
    assert main(["analyze", str(out), "--strategy", "support", "--json-out", str(rep)]) == 0
    text = capsys.readouterr().out
    assert "d_H=4 d_sp=7 class=MDS" in text and "witness_sp=" in text
    assert json.loads(rep.read_text())["class"] == "MDS"


def test_cli_example(capsys, tmp_path):
    rep = tmp_path / "e.json"
    assert main(["example", "--id", "3.1", "--json-out", str(rep)]) == 0
    text = capsys.readouterr().out
    assert "FAIL" not in text and "PASS permutation" in text
    assert json.loads(rep.read_text())["checks"]["d_sp"] == {"expected": 8, "computed": 8}


def test_cli_sweep(capsys):
    assert main(["sweep", "--theorem", "3.2", "--q", "7"]) == 0
    assert main(["sweep", "--theorem", "3.1", "--q", "7", "--n", "4..5"]) == 1
    text = capsys.readouterr().out
    assert "first failing row: n=5" in text


def test_cli_lemma(capsys):
    assert main(["lemma", "--id", "3.4", "--q", "5", "--n", "5"]) == 0
    assert main(["lemma", "--id", "2.3", "--q", "7", "--n", "4"]) == 0
    assert main(["lemma", "--id", "3.1", "--q", "7", "--n", "4"]) == 1
    text = capsys.readouterr().out
    assert "condition_failures={'2+2+2': 18}" in text


def test_cli_invalid(capsys, tmp_path):
    assert main(["construct", "--theorem", "3.1", "--q", "6", "--n", "4", "--out", str(tmp_path / "x")]) == 2
    assert main(["sweep", "--theorem", "3.9", "--q", "7"]) == 2
    assert main(["analyze", str(tmp_path / "none.json")]) == 2
    assert "MalformedCodeFile" in capsys.readouterr().err
    with pytest.raises(SystemExit) as exc:
        main(["example", "--id", "9.9"])
    assert exc.value.code == 2


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "pairmds", "example", "--id", "3.4"],
                         capture_output=True, text=True)
    assert out.returncode == 0, out.stderr
    assert "n=20 k=16 q=5 d_H=3 d_sp=6 class=MDS" in out.stdout
