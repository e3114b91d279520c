# tests/test_suite.py

import asyncio

import pytest

from McCoy.suite import SuiteContext, SuiteJob, Status, Validation, _run_job, guarded, jobs, run_suite
from McCoy.suite.plugins.integer_matrix import integer_pair, matrix_poly_mul, validate_integer_matrix_identity
from McCoy.suite.plugins.localization import validate_localization
from McCoy.suite.plugins.packing import validate_packing
from McCoy.suite.plugins.series_matrix import validate_series_matrix_example
from McCoy.utils.evaluator import Evaluator
from McCoy.utils.exceptions import BudgetExceeded

FAST_JOBS = [
    "validate_radical_oracle",
    "validate_commutative_baseline",
    "validate_local_rings",
    "validate_localizations",
    "validate_coefficient_packing",
    "validate_corners",
]
SKIPPED_JOBS = [
    "validate_series_matrix_not_nc",
    "validate_sequence_rings",
    "validate_polynomial_extension",
    "validate_laurent_extension",
]


def test_validation_keeps_the_first_failure():
    v = Validation("demo", "claim")
    assert v.expect(True, "unused")
    assert not v.expect(False, "first", "Z2")
    v.fail("second", "Z4")
    v.skip("ignored")
    assert v.status is Status.FAIL
    assert v.reason == "first"
    assert v.evidence["failing_instance"] == "Z2"


def test_merge_prefers_failures_over_skips():
    parent = Validation("parent", "claim")
    parent.merge(Validation("a", "claim", ["Z2"]).skip("too big"), "a")
    assert parent.status is Status.PASS
    assert "too big" in parent.reason
    parent.merge(Validation("b", "claim", ["Z4"]).fail("broken", "Z4"), "b")
    assert parent.status is Status.FAIL
    assert parent.instances == ["Z2", "Z4"]


def test_guarded_turns_budget_refusals_into_skips():
    def body():
        raise BudgetExceeded("too large", estimate=10, budget=1)

    v = guarded(Validation("demo", "claim"), body)
    assert v.status is Status.SKIPPED
    assert "too large" in v.reason


def test_job_registry_is_ordered():
    listed = jobs("paper")
    indices = [job.index for job in listed]
    assert indices == sorted(indices)
    assert len(set(indices)) == len(indices)
    names = {job.name for job in listed}
    assert set(FAST_JOBS + SKIPPED_JOBS) <= names
    assert {"validate_integer_matrix", "validate_series_matrix", "validate_dualities", "validate_oracles"} <= names


def test_fast_jobs_pass_and_infinite_claims_are_skipped():
    only = FAST_JOBS + SKIPPED_JOBS
    report = asyncio.run(run_suite(context=SuiteContext(Evaluator()), workers=2, only=only))
    by_name = {v.name: v for v in report.validations}
    assert len(report.validations) == len(only)
    for name in ("radical_oracle", "commutative_baseline", "local_rings", "localizations", "coefficient_packing", "corners"):
        assert by_name[name].status is Status.PASS, by_name[name].reason
    assert report.counts["skipped"] == len(SKIPPED_JOBS)
    assert report.ok
    assert set(report.to_dict()["resources"]) == {"peak_rss", "cpu_time", "elapsed"}


def test_integer_matrix_identity():
    f, g = integer_pair()
    assert len(f) == 9 and len(g) == 2
    v = validate_integer_matrix_identity()
    assert v.status is Status.PASS
    assert v.evidence["fg_nonzero_terms"] == []
    assert v.evidence["gf_nonzero_terms"]
    assert all(int(x) == 0 for c in matrix_poly_mul(f, g) for x in c.flat)


def test_series_matrix_example_at_smallest_truncation():
    v = validate_series_matrix_example(2, 1)
    assert v.status is Status.PASS, v.reason
    assert v.evidence["order"] == 32
    assert v.evidence["c"]


def test_series_matrix_example_rejects_degenerate_truncation():
    assert validate_series_matrix_example(1, 1).status is Status.SKIPPED


def test_localization(ring):
    v = validate_localization(ring("Z6"))
    assert v.status is Status.PASS
    assert v.evidence["central_regular"] == ["1", "5"]


def test_packing_validation(ring):
    assert validate_packing(ring("Tri(Z2,2)")).status is Status.PASS


@pytest.mark.slow
def test_full_suite_has_no_failures_and_is_deterministic():
    first = asyncio.run(run_suite(context=SuiteContext(Evaluator()), workers=1))
    second = asyncio.run(run_suite(context=SuiteContext(Evaluator()), workers=4))
    assert first.ok, [(v.name, v.reason) for v in first.validations if not v.ok]
    assert [v.to_dict() for v in first.validations] == [v.to_dict() for v in second.validations]


def test_a_crashing_job_fails_alone():
    def crash(context):
        raise TypeError("not a ring element")

    context = SuiteContext(Evaluator())
    v = _run_job(SuiteJob(999, "validate_crash", crash), context)
    assert v.status is Status.FAIL
    assert v.name == "validate_crash"
    assert "TypeError" in v.reason
