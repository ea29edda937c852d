import json
import pathlib

import pytest

import weylcomp

SCENARIO = pathlib.Path(__file__).resolve().parents[2] / "scenarios" / "example_n3.json"


def test_dot_action():
    assert weylcomp.dot_act([2, 1, 3], [2, 2, 3]) == {"t": [1, 3, 3]}
    assert weylcomp.dot_act([3, 2, 1], [2, 2, 3]) == {"t": [1, 2, 4]}


def test_cosets():
    reps = [c["rep"]["t"] for c in weylcomp.cosets([2, 1])]
    assert reps == [[1, 2, 3], [1, 3, 2], [2, 3, 1]]
    info = weylcomp.coset_info([3, 2, 1], [2, 1])
    assert info["lg_P"] == 2
    assert info["coset"]["rep"]["t"] == [2, 3, 1]


def test_component_and_step():
    assert weylcomp.component_in_zqp([3, 2, 1], [2, 1], [2, 1], [1, 1, 2])
    assert not weylcomp.component_in_zqp([1, 3, 2], [2, 1], [2, 1], [1, 1, 2])
    step = weylcomp.find_induction_step([1, 3, 2], [2, 1], [1, 1, 2])
    assert step["alpha"] == {"tau": "t", "i": 1, "j": 2}
    assert step["to"]["rep"]["t"] == [2, 3, 1]


def test_companion_scenario():
    scenario = json.loads(SCENARIO.read_text())
    entries = weylcomp.companion_set(scenario)
    weights = [e["character"]["algebraic_weight"]["tau0"] for e in entries]
    assert weights == [[1, 3, 3], [2, 2, 3]]
    walk = weylcomp.certify_walk(SCENARIO.read_text())
    assert len(walk["chain"]) == 1


def test_bad_scenario():
    with pytest.raises(ValueError, match="places"):
        weylcomp.companion_set({})


def test_finite_field():
    assert weylcomp.flag_count(3, 3) == 52
    report = weylcomp.ff_verify("all", 2, 3)
    assert report["pass"] and report["skipped"] == []
    with pytest.raises(IndexError):
        weylcomp.flag_count(6, 2)


def test_good_form():
    out = weylcomp.good_form([[1, 5], [0, 2]])
    assert out["result"] == [["1", "0"], ["0", "2"]]


def test_example_matches_schema():
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads((SCENARIO.parents[1] / "schema" / "scenario.json").read_text())
    jsonschema.validate(json.loads(SCENARIO.read_text()), schema)
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate({"places": []}, schema)
