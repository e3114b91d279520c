# tests/test_cli.py

import json

import pytest

from McCoy.__main__ import (
    EXIT_BUDGET,
    EXIT_COUNTEREXAMPLE,
    EXIT_OK,
    EXIT_USAGE,
    run,
)


def invoke(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_check_local_ring_holds(capsys):
    code, out = invoke(capsys, "check", "Z4", "--property", "j-mccoy", "--max-degree", "2")
    report = json.loads(out)
    assert code == EXIT_OK
    assert report["schema"] == 1
    assert report["command"] == "check"
    assert report["outcome"] == "HoldsUpToDegree(2)"


def test_check_matrix_ring_counterexample(capsys):
    code, out = invoke(capsys, "check", "Mat(Z2,2)", "--property", "mccoy", "--max-degree", "1")
    report = json.loads(out)
    assert code == EXIT_COUNTEREXAMPLE
    assert report["outcome"] == "Counterexample"
    assert report["counterexample"]["f"]


def test_radical_labels(capsys):
    code, out = invoke(capsys, "radical", "T(Z2,2)")
    assert code == EXIT_OK
    assert json.loads(out)["jacobson"] == ["(0,0)", "(0,1)"]


def test_reports_are_byte_identical(capsys):
    _, first = invoke(capsys, "--workers", "1", "check", "Tri(Z2,2)", "--property", "j-mccoy", "--side", "left")
    _, second = invoke(capsys, "--workers", "1", "check", "Tri(Z2,2)", "--property", "j-mccoy", "--side", "left")
    assert first == second


def test_parse_error_exit_code(capsys):
    assert run(["build", "Mat(Z2,0)"]) == EXIT_USAGE
    assert run(["build", "Frob(Z2)"]) == EXIT_USAGE
    assert "offset" in capsys.readouterr().err


def test_budget_exit_code(capsys):
    assert run(["--budget", "10", "check", "Mat(Z2,2)", "--max-degree", "3"]) == EXIT_BUDGET


def test_build_text_report(capsys):
    code, out = invoke(capsys, "--format", "text", "build", "Z4", "--limit", "2")
    assert code == EXIT_OK
    assert "Order       4" in out
    assert "first 2 of 4" in out


def test_hunt_over_the_desk_list(capsys):
    code, out = invoke(capsys, "hunt", "--property", "mccoy", "--max-degree", "1")
    report = json.loads(out)
    assert code == EXIT_COUNTEREXAMPLE
    rows = {row["ring"]: row for row in report["results"]}
    assert rows["Z4"]["outcome"] == "HoldsUpToDegree(1)"
    assert rows["Mat(Z2,2)"]["counterexample"]


def test_validate_selected_jobs(capsys):
    code, out = invoke(capsys, "validate", "--only", "validate_sequence_rings", "--truncation", "3")
    report = json.loads(out)
    assert code == EXIT_OK
    assert report["truncation"] == 3
    assert report["summary"] == {"passed": 0, "failed": 0, "skipped": 1}


def test_registry_listing(capsys):
    code, out = invoke(capsys, "registry")
    names = json.loads(out)
    assert {"id", "swap", "frob"} <= set(names["sigma"])
    assert {"regular", "canonical"} <= set(names["bimodule"])


def test_usage_errors_exit_with_two():
    with pytest.raises(SystemExit) as info:
        run(["check"])
    assert info.value.code == 2
