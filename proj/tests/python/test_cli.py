"""CLI contract tests: exit codes, determinism, stdin input.

Runs only when RISKPATH_CLI points at the built binary (ctest sets it).
"""

import json
import os
import pathlib
import subprocess

import pytest

CLI = os.environ.get("RISKPATH_CLI")
DATA = pathlib.Path(__file__).resolve().parents[2] / "data"

pytestmark = pytest.mark.skipif(not CLI, reason="RISKPATH_CLI not set")


def run(*args, stdin=None):
    return subprocess.run(
        [CLI, *args], input=stdin, capture_output=True, text=True, timeout=120
    )


def test_accumulate_json_output():
    r = run("accumulate", str(DATA / "figure1.json"), "--model", "eagle")
    assert r.returncode == 0
    report = json.loads(r.stdout)
    values = {e["id"]: e["accumulated"] for e in report["edges"]}
    assert round(values["1->2"], 2) == 0.81
    assert round(values["1->3"], 2) == 0.88


def test_bad_input_exits_2():
    r = run("accumulate", str(DATA / "missing-file.json"))
    assert r.returncode == 2
    assert "error" in r.stderr

    cyclic = json.dumps(
        {
            "edges": [
                {"id": "a", "tail": "1", "head": "2", "risk": 0.5},
                {"id": "b", "tail": "2", "head": "1", "risk": 0.5},
            ],
            "source": "1",
            "destination": "2",
        }
    )
    r = run("accumulate", "-", stdin=cyclic)
    assert r.returncode == 2
    assert "cycle" in r.stderr


def test_enumeration_guard_exits_3():
    edges = []
    prev = "s"
    for k in range(26):
        nxt = "t" if k == 25 else f"v{k:02d}"
        edges.append({"id": f"e{k:02d}", "tail": prev, "head": nxt, "risk": 0.5})
        prev = nxt
    text = json.dumps({"edges": edges, "source": "s", "destination": "t"})
    r = run("enumerate", "-", stdin=text)
    assert r.returncode == 3
    assert "too large" in r.stderr


def test_simulate_deterministic_bytes():
    args = ("simulate", str(DATA / "figure2.json"), "--alpha", "0.5",
            "--trials", "1", "--seed", "7")
    first = run(*args)
    second = run(*args)
    assert first.returncode == 0
    assert first.stdout == second.stdout

    full = json.loads(first.stdout)
    assert full["trials"] == 1
    assert full["failure_rate"] in (0.0, 1.0)


def test_simulate_alpha_one_always_fails():
    r = run("simulate", str(DATA / "chain2.json"), "--alpha", "1", "--trials", "10")
    assert json.loads(r.stdout)["failure_rate"] == 1.0


def test_sweep_csv_shape():
    r = run("sweep", str(DATA / "figure2.json"), "--steps", "3")
    lines = r.stdout.strip().splitlines()
    assert lines[0] == "alpha,1->2,1->3,chosen"
    assert lines[1].startswith("0,0,0,")
    assert lines[-1].startswith("1,1,1,")


def test_paradox_empty_for_chain():
    r = run("paradox", str(DATA / "chain2.json"))
    assert json.loads(r.stdout)["crossovers"] == []


def test_route_prints_attempt_orders():
    r = run("route", str(DATA / "figure2.json"), "--alpha", "0.5")
    report = json.loads(r.stdout)
    assert report["source_order"] == ["1->2", "1->3"]
    assert report["planned_path"] == ["1->2", "2->4", "4->6", "6->9"]


def test_baseline():
    r = run("baseline", str(DATA / "figure2.json"), "--alpha", "0.5")
    assert json.loads(r.stdout)["path"] == ["1->3", "3->8", "8->9"]


def test_gen_round_trips_through_validation():
    r = run("gen", "--layers", "4", "--width", "2", "--edge-prob", "0.7", "--seed", "3")
    assert r.returncode == 0
    again = run("gen", "--layers", "4", "--width", "2", "--edge-prob", "0.7", "--seed", "3")
    assert r.stdout == again.stdout
    check = run("accumulate", "-", stdin=r.stdout)
    assert check.returncode == 0


def test_dot_input():
    r = run("accumulate", str(DATA / "figure1.dot"), "--model", "eagle", "--format", "table")
    assert r.returncode == 0
    assert "0.8052" in r.stdout
