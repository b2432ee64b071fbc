"""Exit codes, streams and determinism of the command-line tool."""

import json
import os
import pathlib
import subprocess
from fractions import Fraction

import jsonschema
import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]
CLI = os.environ.get("TROPNEWTON_CLI", str(ROOT / "build" / "tropnewton"))
SCHEMA = json.loads((ROOT / "schema" / "result.schema.json").read_text())


def cli(*args, stdin=None):
    return subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True, timeout=300)


def data(name):
    return str(ROOT / "data" / name)


def test_zerodim_json_has_four_points():
    r = cli("zerodim", data("triangular.ideal"), "--json")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    jsonschema.validate(doc, SCHEMA)
    assert len(doc["outputs"]["points"]) == 4


def test_point_logs_witness_on_stderr():
    r = cli("point", data("grass25.ideal"), "--seed", "7", "--json")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["verification"]["passed"]
    assert "substituted" in r.stderr
    assert cli("point", data("grass25.ideal"), "--seed", "7", "--json", "-q").stderr == ""


def test_link_text_output():
    r = cli("link", data("line.ideal"))
    assert r.returncode == 0
    assert r.stdout.splitlines()[0] == "valency 3"


def test_newton_named_weight():
    r = cli("newton", data("mixed.ideal"), "--weight", "origin", "--json")
    poly = json.loads(r.stdout)["outputs"]["polygons"][0]
    assert poly["vertices"] == [[0, "0"], [1, "0"], [2, "3"]]
    assert not poly["unique"]


@pytest.mark.parametrize(
    "args,code,status",
    [
        (["verify", data("line.ideal"), "--weight", "1,2,0"], 2, "verification_failed"),
        (["zerodim", data("line.ideal")], 1, "input_error"),
        (["point", data("grass25.ideal"), "--substitute", "t,t,t,t,t,t,t", "--max-attempts", "1"], 3, "resource_limit"),
        (["zerodim", data("deep.ideal"), "--precision-cap", "4"], 3, "resource_limit"),
    ],
)
def test_exit_code_follows_status(args, code, status):
    r = cli(*args, "--json")
    assert r.returncode == code
    doc = json.loads(r.stdout)
    jsonschema.validate(doc, SCHEMA)
    assert doc["status"] == status


def test_syntax_error_from_stdin():
    r = cli("zerodim", "-", stdin="field puiseux\nring x\ngens\nx +* 1\n")
    assert r.returncode == 1
    assert "SyntaxError" in r.stderr


def test_rationals_in_lowest_terms():
    doc = json.loads(cli("zerodim", data("padic.ideal"), "--json", "--trace").stdout)

    def walk(v):
        if isinstance(v, dict):
            for x in v.values():
                yield from walk(x)
        elif isinstance(v, list):
            for x in v:
                yield from walk(x)
        elif isinstance(v, str) and v.lstrip("-").replace("/", "").isdigit():
            yield v

    for s in walk(doc["outputs"]):
        assert str(Fraction(s)) == s


@pytest.mark.parametrize("args", [["point", data("grass25.ideal"), "--seed", "3"], ["link", data("line.ideal"), "--precondition", "--seed", "5"]])
def test_seeded_runs_are_byte_identical(args):
    assert cli(*args, "--json").stdout == cli(*args, "--json").stdout
