import csv
import importlib
import io
import json
import re
import subprocess
import sys

import pytest

from lensurgery.cli import render_json, run


def test_d_single_spin():
    assert run(["d", "--p", "3", "--q", "1", "--spin", "0"]) == (0, "1/2")


def test_d_all_flips_orientation():
    status, out = run(["d", "--p", "-6", "--q", "1", "--all"])
    assert status == 0
    assert "L(6,5)" in out and out.count("\n") == 5


def test_classify_text():
    assert run(["classify", "--n", "7"]) == (0, "NotObstructed (witness: Figure 2 non-coherent banding)")


def test_classify_trace():
    status, out = run(["classify", "--n", "-6", "--trace"])
    assert status == 0
    assert "[+k] quadratic: passes" in out and "'B2': [3]" in out


def test_spins_and_linkform():
    assert run(["spins", "--p", "2", "--q", "1"])[1].endswith("0, 1")
    status, out = run(["linkform", "--n", "-8"])
    assert status == 0 and "not equivalent" in out


def test_band():
    assert run(["band", "--n", "7", "--non-coherent"])[1].startswith("possible")
    assert "parity-mismatch" in run(["band", "--n", "7", "--coherent"])[1]


def test_scan_check_theorem_exit_status():
    status, out = run(["scan", "--from", "-200", "--to", "200", "--check-theorem"])
    assert status == 0 and out.endswith("theorem check: OK")


def test_scan_csv():
    status, out = run(["scan", "--from", "-8", "--to", "-5", "--csv"])
    assert status == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["n", "verdict", "firing_check", "N0", "witness"]
    assert [r["n"] for r in rows] == ["-8", "-7", "-6", "-5"]
    assert rows[0]["firing_check"] == "linking_form"
    assert rows[2]["verdict"] == "NotObstructed" and rows[2]["N0"] == "1/1"


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["d", "--p", "6", "--q", "2"],
        ["d", "--p", "3", "--q", "1", "--spin", "7"],
        ["d", "--p", "3", "--q", "1", "--spin", "0", "--all"],
        ["band", "--n", "7"],
        ["classify"],
        ["classify", "--n", "7", "--csv"],
        ["scan", "--from", "3", "--to", "1"],
        ["linkform", "--n", "9"],
        ["nonsense"],
    ],
)
def test_argument_errors_exit_two(argv):
    assert run(argv)[0] == 2


JSON_CASES = [
    ["d", "--p", "7", "--q", "3", "--all"],
    ["spins", "--p", "6", "--q", "1"],
    ["linkform", "--n", "7"],
    ["classify", "--n", "-6", "--trace"],
    ["classify", "--n", "0"],
    ["scan", "--from", "-10", "--to", "10", "--check-theorem"],
    ["band", "--n", "-6", "--coherent"],
]


@pytest.mark.parametrize("argv", JSON_CASES)
def test_json_records_round_trip(argv):
    status, out = run(argv + ["--json"])
    assert status == 0
    record = json.loads(out)
    assert set(record) == {"command", "inputs", "result", "citations"}
    assert render_json(json.loads(out)) == out
    # no decimal approximations anywhere
    assert not re.search(r"\d\.\d", out)


def test_json_flag_position_is_free():
    assert run(["--json", "linkform", "--n", "7"]) == run(["linkform", "--n", "7", "--json"])


def test_json_rationals_are_fractions():
    record = json.loads(run(["d", "--p", "3", "--q", "1", "--all", "--json"])[1])
    assert record["result"] == {"0": "1/2", "1": "-1/6", "2": "-1/6"}


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "lensurgery.cli", "scan", "--from", "-200", "--to", "200", "--check-theorem"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    proc = subprocess.run(
        [sys.executable, "-m", "lensurgery.cli", "d", "--p", "4", "--q", "2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 2 and "error" in proc.stderr


def test_theorem_mismatch_exits_one(monkeypatch):
    classify_mod = importlib.import_module("lensurgery.classify")

    monkeypatch.setattr(classify_mod, "THEOREM_SET", frozenset({-6, -2, -1, 1, 2, 3, 4}))
    status, out = run(["scan", "--from", "-10", "--to", "10", "--check-theorem"])
    assert status == 1 and "MISMATCH" in out
