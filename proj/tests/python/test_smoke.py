import json

import pytest

import blowup


def test_generate_is_deterministic():
    a = blowup.generate(3, 5, seed=42)
    assert a == blowup.generate(3, 5, seed=42)
    data = json.loads(a)
    assert data["char"] == 32003
    assert data["d"] == 3 and data["n"] == 5


def test_generate_rejects_even_n():
    with pytest.raises(ValueError):
        blowup.generate(3, 4)


def test_verify_required_instance():
    report = blowup.verify(blowup.generate(3, 5, seed=42))
    assert report["required"]
    assert [c["name"] for c in report["checks"]] == list(blowup.CHECKS)
    assert all(c["status"] == "pass" for c in report["checks"])


def test_verify_selection_and_dict_input():
    instance = json.loads(blowup.generate(4, 5, seed=1))
    report = blowup.verify(instance, checks=["multiplicity"])
    assert len(report["checks"]) == 1
    assert report["checks"][0]["certificate"]["e_computed"] == 3


def test_budget_gives_timeouts():
    report = blowup.verify(blowup.generate(3, 5, seed=42), checks="main", budget_pairs=2)
    assert {c["status"] for c in report["checks"]} == {"timeout"}


def test_corrupted_instance_is_rejected():
    instance = json.loads(blowup.generate(3, 5, seed=42))
    instance["phi"] = [[[1, 0, 0]] * 5 for _ in range(5)]
    with pytest.raises(ValueError):
        blowup.verify(instance)
    with pytest.raises(blowup.ParseError):
        blowup.verify_json("{")


def test_formulas():
    assert blowup.expected_multiplicity(3, 5) == 4
    assert blowup.expected_multiplicity(4, 7) == 13
    assert blowup.monomial_count(4, 7) == 13
    assert blowup.closed_form_hilbert(3, 5, 2) == [1, 5, 15]


def test_groebner_basis():
    assert blowup.groebner_basis(["x*y - 1", "y^2 - 1"], ["x", "y"], order="lex") == ["y^2 - 1", "x - y"]
