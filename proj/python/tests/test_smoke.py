import json
import pathlib
from fractions import Fraction

import jsonschema
import pytest

import tropnewton as tn

ROOT = pathlib.Path(__file__).resolve().parents[2]
DATA = ROOT / "data"
SCHEMA = json.loads((ROOT / "schema" / "result.schema.json").read_text())


def ideal(name):
    return (DATA / name).read_text()


def as_points(rows):
    return {tuple(Fraction(x) for x in row) for row in rows}


def test_zerodim_puiseux_points():
    doc = tn.zerodim(ideal("triangular.ideal"))
    jsonschema.validate(doc, SCHEMA)
    assert as_points(doc["outputs"]["points"]) == {(0, 0, 0), (0, -1, 1), (-1, 1, 0), (-1, -1, 2)}
    assert doc["verification"]["passed"]


def test_zerodim_padic_fallback_trace():
    doc = tn.zerodim(ideal("padic.ideal"), trace=True)
    jsonschema.validate(doc, SCHEMA)
    assert (0, 0, Fraction(-1, 2)) in as_points(doc["outputs"]["points"])
    assert {f["precision"] for f in doc["outputs"]["fallback"]} == {2}


def test_point_is_seeded_and_verified():
    a = tn.run("point", ideal("grass25.ideal"), seed=7)[1]
    b = tn.run("point", ideal("grass25.ideal"), seed=7)[1]
    assert a == b
    doc = json.loads(a)
    jsonschema.validate(doc, SCHEMA)
    assert doc["status"] == "ok"
    assert all(item["tropical"] for item in doc["verification"]["items"])


def test_link_line_valency():
    doc = tn.link(ideal("line.ideal"))
    jsonschema.validate(doc, SCHEMA)
    assert doc["outputs"]["valency"] == 3


def test_newton_accepts_list_weight():
    doc = tn.newton(ideal("mixed.ideal"), [2, 1])
    poly = doc["outputs"]["polygons"][0]
    assert poly["vertices"] == [[0, "2"], [1, "1"], [2, "3"]]
    assert poly["unique"]


def test_groebner_and_triangulate():
    assert tn.groebner(ideal("line.ideal"))["outputs"]["dimension"] == 2
    assert len(tn.triangulate(ideal("triangular.ideal"))["outputs"]["components"]) == 1


def test_verify_failure_status_and_exit_code():
    with pytest.raises(tn.TropnewtonError) as err:
        tn.verify(ideal("line.ideal"), "1,2,0")
    assert err.value.document["status"] == "verification_failed"
    assert tn.exit_code(tn.Status.VERIFICATION_FAILED) == 2


def test_input_error_document():
    doc = tn.run_command("zerodim", "field padic 4\n", check=False)
    jsonschema.validate(doc, SCHEMA)
    assert doc["status"] == "input_error"
    assert doc["error"]["kind"] == "NonPrimeModulus"
