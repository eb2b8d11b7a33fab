import json
import subprocess
import sys
from pathlib import Path

import pytest

from orientals.cli import main

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def object_cell(i):
    chain = {"degree": 0, "coeffs": {f"({i})": 1}}
    return json.dumps({"dim": 0, "row0": [chain], "row1": [chain]})


def test_oriental2_matches_golden(capsys):
    code, out, _ = run(capsys, "oriental", 2)
    assert code == 0
    assert out == (GOLDEN / "oriental2.txt").read_text(encoding="utf-8")


def test_oriental_json_round_trips():
    from orientals import oriental
    from orientals.io import load_adc
    data = json.loads((DATA / "oriental4.json").read_text())
    assert load_adc(data) == oriental(4)
    assert len(data["atoms"]) == 31


def test_enumerate_matches_golden(capsys):
    code, out, _ = run(capsys, "enumerate", DATA / "oriental2.json", "--dim", 2, "--cap", 3, "--json")
    assert code == 0
    assert json.loads(out) == json.loads((GOLDEN / "enumerate_oriental2.json").read_text())
    assert json.loads(out)["counts"] == [3, 7, 8]


def test_output_is_deterministic(capsys):
    first = run(capsys, "enumerate", DATA / "oriental2.json", "--dim", 2, "--json")[1]
    second = run(capsys, "enumerate", DATA / "oriental2.json", "--dim", 2, "--json")[1]
    assert first == second


def test_cap_from_the_environment(capsys, monkeypatch):
    monkeypatch.setenv("ORIENTALS_CAP", "0")
    code, out, _ = run(capsys, "enumerate", DATA / "oriental2.json", "--dim", 0, "--json")
    assert json.loads(out) == {"counts": [0], "truncated": True, "cells": []}


def test_contraction_checks(capsys):
    assert run(capsys, "check-contraction", DATA / "oriental4.json")[0] == 0
    assert run(capsys, "check-contraction", DATA / "oriental4.json", "--dual")[0] == 0


def test_contraction_file(tmp_path, capsys):
    from orientals.contraction import standard_contraction
    from orientals.io import adc_to_json
    c = standard_contraction(2)
    data = c.to_json()
    data["complex"] = adc_to_json(c.complex)
    good = tmp_path / "good.json"
    good.write_text(json.dumps(data))
    assert run(capsys, "check-contraction", good)[0] == 0
    data["h"].pop("(1,2)")
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    code, out, _ = run(capsys, "check-contraction", bad)
    assert code == 1 and "(✶1)" in out


def test_check_base(capsys):
    assert run(capsys, "check-base", DATA / "oriental4.json")[0] == 0
    code, out, _ = run(capsys, "check-base", DATA / "two_cycle.json")
    assert code == 1 and "cycle" in out


def test_nerve(capsys):
    code, out, _ = run(capsys, "nerve", DATA / "oriental2.json", "--n", 1, "--json")
    assert code == 0 and json.loads(out)["counts"] == [3, 7]


def test_hom(capsys):
    code, out, _ = run(capsys, "hom", DATA / "oriental2.json",
                       "--from", object_cell(0), "--to", object_cell(2), "--json")
    data = json.loads(out)
    assert code == 0
    assert [len(level) for level in data["levels"]] == [2, 3]
    assert len(data["quasi_initial"]) == 1 and len(data["quasi_final"]) == 1


def test_truncate2(capsys):
    code, out, _ = run(capsys, "truncate2", DATA / "diamond.json", "--verify", "--json")
    data = json.loads(out)
    assert code == 0 and data["verification"]["ok"]
    ac = next(h for h in data["homs"] if (h["from"], h["to"]) == ("a", "c"))
    assert len(ac["objects"]) == 3


def test_format_errors(tmp_path, capsys):
    broken = tmp_path / "broken.json"
    broken.write_text('{"basis": [["x"]')
    code, _, err = run(capsys, "check-base", broken)
    assert code == 2 and "line 1" in err
    code, _, err = run(capsys, "check-base", tmp_path / "missing.json")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", str(DATA / "oriental2.json")])
    assert exc.value.code == 2


def test_module_entry_point():
    result = subprocess.run([sys.executable, "-m", "orientals", "oriental", "1"],
                            capture_output=True, text=True, check=True)
    assert "<(0,1)> = ((0),(0,1);(1),(0,1))" in result.stdout
