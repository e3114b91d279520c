# tests/test_mccoy.py

import pytest

from McCoy.core.constructions import make_opposite
from McCoy.core.mccoy import (
    Family,
    PropertyKind,
    Side,
    admissible_witnesses,
    check_property,
    hunt,
    implication_audit,
    witness_right,
)
from McCoy.core.poly import Poly, poly_mul
from McCoy.core.radical import jacobson_radical
from McCoy.utils.exceptions import BudgetExceeded, ConstructionError

RIGHT_MCCOY = PropertyKind(Family.MCCOY)
RIGHT_J = PropertyKind(Family.J)


def test_property_kind_parse():
    assert PropertyKind.parse("J-McCoy", "LEFT") == PropertyKind(Family.J, Side.LEFT)
    assert str(PropertyKind.parse("nc-mccoy")) == "right nc-mccoy"
    with pytest.raises(ConstructionError):
        PropertyKind.parse("armendariz")


def test_witnesses(ring):
    Z4 = ring("Z4")
    assert witness_right(Poly(Z4, (2, 2)), RIGHT_J) == 1
    assert witness_right(Poly(Z4, (2, 2)), RIGHT_MCCOY) == 2
    assert admissible_witnesses(Poly(Z4, (2,)), Family.MCCOY) == {2}
    Z2 = ring("Z2")
    assert witness_right(Poly(Z2, (1,)), RIGHT_J) is None
    with pytest.raises(ConstructionError):
        witness_right(Poly(Z2, ()), RIGHT_J)


@pytest.mark.parametrize("expr", ["Z2", "Z4", "Z6", "TruncSeries(Z2,3)"])
def test_commutative_rings_are_mccoy(ring, expr):
    verdict = check_property(ring(expr), RIGHT_MCCOY, 2, workers=1)
    assert verdict.holds
    assert verdict.outcome == "HoldsUpToDegree(2)"


@pytest.mark.parametrize("expr", ["Z4", "Z8", "TruncSeries(Z2,3)"])
@pytest.mark.parametrize("side", [Side.RIGHT, Side.LEFT])
def test_local_rings_are_j_mccoy(ring, expr, side):
    assert check_property(ring(expr), PropertyKind(Family.J, side), 2, workers=1).holds


@pytest.mark.parametrize("expr", ["Tri(Z2,2)", "S(Z2,2)", "T(Z2,3)", "SkewTri(Prod(Z2,Z2),2,swap)"])
def test_triangular_families_are_j_mccoy(ring, expr):
    verdict = check_property(ring(expr), RIGHT_J, 1, workers=1)
    assert verdict.holds
    R = ring(expr)
    J = jacobson_radical(R)
    for pair, r in verdict.witness_log.items():
        assert r != R.zero
        assert all(R.mul(a, r) in J for a in pair.f.coeffs)


def test_full_matrix_ring_has_a_counterexample(ring):
    M = ring("Mat(Z2,2)")
    verdict = check_property(M, RIGHT_MCCOY, 1, workers=1)
    assert not verdict.holds
    assert verdict.outcome == "Counterexample"
    pair = verdict.counterexample
    assert poly_mul(pair.f, pair.g).is_zero
    assert admissible_witnesses(pair.f, Family.MCCOY) == frozenset()
    # J(M_2(Z2)) = 0, so the same pair breaks J-McCoy
    assert not check_property(M, RIGHT_J, 1, workers=1).holds


@pytest.mark.slow
def test_full_matrix_ring_counterexample_at_degree_three(ring):
    verdict = check_property(ring("Mat(Z2,2)"), RIGHT_MCCOY, 3, workers=1, log_limit=0)
    assert not verdict.holds


@pytest.mark.parametrize("expr, family, dmax", [
    ("Tri(Z2,2)", Family.J, 1),
    ("Mat(Z2,2)", Family.MCCOY, 1),
    ("Z8", Family.J, 2),
])
def test_left_properties_are_right_properties_of_the_opposite(ring, expr, family, dmax):
    R = ring(expr)
    left = check_property(R, PropertyKind(family, Side.LEFT), dmax, workers=1)
    right = check_property(make_opposite(R), PropertyKind(family, Side.RIGHT), dmax, workers=1)
    assert left.outcome == right.outcome
    assert left.pairs_examined == right.pairs_examined
    mirrored = {(p.g.coeffs, p.f.coeffs): r for p, r in left.witness_log.items()}
    assert mirrored == {(p.f.coeffs, p.g.coeffs): r for p, r in right.witness_log.items()}
    if not left.holds:
        assert poly_mul(left.counterexample.f, left.counterexample.g).is_zero


def test_witness_log_limit(ring):
    verdict = check_property(ring("Z4"), RIGHT_J, 2, workers=1, log_limit=3)
    assert len(verdict.witness_log) == 3
    assert verdict.log_truncated
    assert "witnesses" not in verdict.to_dict(include_witnesses=False)


def test_budget_refusal(ring):
    with pytest.raises(BudgetExceeded):
        check_property(ring("Mat(Z2,2)"), RIGHT_MCCOY, 3, budget=10)


@pytest.mark.slow
def test_verdicts_do_not_depend_on_worker_count(ring):
    M = ring("Mat(Z2,2)")
    one = check_property(M, RIGHT_J, 2, workers=1)
    many = check_property(M, RIGHT_J, 2, workers=4)
    assert one.to_dict() == many.to_dict()


def test_hunt_streams_one_verdict_per_ring(ring):
    rings = [ring("Z2"), ring("Mat(Z2,2)")]
    outcomes = [v.outcome for v in hunt(rings, RIGHT_MCCOY, 1, workers=1)]
    assert outcomes == ["HoldsUpToDegree(1)", "Counterexample"]


@pytest.mark.parametrize("expr", ["Z2", "Z4", "Z6", "Tri(Z2,2)", "Mat(Z2,2)", "TruncSeries(Z2,3)"])
def test_implication_audit(ring, expr):
    report = implication_audit(ring(expr), 1)
    data = report.to_dict()
    assert set(data["verdicts"]) == {family.value for family in Family}
    if report.j_semisimple:
        assert report.outcome(Family.MCCOY) == report.outcome(Family.J)
    if report.nilpotents_in_radical:
        assert report.nc_outside_j == 0


def test_field_audit_agrees_everywhere(ring):
    report = implication_audit(ring("Z5"), 2)
    assert report.pairs == 0
    assert {report.outcome(family) for family in Family} == {"HoldsUpToDegree(2)"}


def test_left_witness_fault_names_the_checked_polynomial(ring):
    from McCoy.core.mccoy import Verdict, _reverify
    from McCoy.core.poly import ZeroPair
    from McCoy.utils.exceptions import ConsistencyFault

    Z4 = ring("Z4")
    pair = ZeroPair(Poly(Z4, (2,)), Poly(Z4, (2, 2)))
    bad = Verdict(ring=Z4.label, kind=PropertyKind(Family.MCCOY, Side.LEFT), dmax=1, witness_log={pair: 1})
    with pytest.raises(ConsistencyFault, match=r"for g = "):
        _reverify(Z4, bad)


def test_search_pool_off_the_main_thread_uses_threads():
    import threading
    from concurrent.futures import ThreadPoolExecutor

    from McCoy.core.mccoy import _make_executor

    made = []
    worker = threading.Thread(target=lambda: made.append(_make_executor(2)))
    worker.start()
    worker.join()
    assert isinstance(made[0], ThreadPoolExecutor)
    made[0].shutdown()


@pytest.mark.slow
def test_process_pool_matches_sequential_scan(ring):
    R = ring("Z8")
    one = check_property(R, RIGHT_J, 3, workers=1, log_limit=50)
    many = check_property(R, RIGHT_J, 3, workers=3, log_limit=50)
    assert one.to_dict() == many.to_dict()
