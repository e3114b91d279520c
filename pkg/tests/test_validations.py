# tests/test_validations.py

import numpy as np
import pytest

from McCoy.core.constructions import make_corner, make_product
from McCoy.core.mccoy import Family, admissible_witnesses
from McCoy.core.poly import poly_mul
from McCoy.core.radical import jacobson_radical
from McCoy.core.ring import Ideal
from McCoy.suite import Status, verdict
from McCoy.suite.plugins.corner import as_sorted, lift_corner_pairs, validate_corner
from McCoy.suite.plugins.families import validate_families
from McCoy.suite.plugins.product import lift_pair, validate_product
from McCoy.suite.plugins.quotient import validate_quotient
from McCoy.suite.plugins.triangular import corner_injection, validate_triangular
from McCoy.utils.messages import MSG_SKIP_FULL_CORNER, MSG_SKIP_NOT_ABELIAN


@pytest.mark.parametrize("members", [frozenset({3, 0, 2}), [2, 3, 0], np.array([3, 0, 2]), (0, 2, 3)])
def test_as_sorted_accepts_any_collection(members):
    assert as_sorted(members).tolist() == [0, 2, 3]


def test_as_sorted_accepts_a_scalar():
    assert as_sorted(5).tolist() == [5]


def test_corner_of_a_product(ring):
    R = ring("Prod(Z2,Z4)")
    v = validate_corner(R, R.index_of("(1,0)"), 2)
    assert v.status is Status.PASS, v.reason
    assert v.evidence["lifted_pairs"]["lost_zero"] == 0
    assert v.evidence["lifted_pairs"]["lost_witness"] == 0
    assert v.evidence["complement"]["outcome"] == "HoldsUpToDegree(2)"


def test_full_corner_skips_the_converse(ring):
    R = ring("Z4")
    v = validate_corner(R, R.one, 2)
    assert v.status is Status.PASS, v.reason
    assert v.evidence["converse"] == MSG_SKIP_FULL_CORNER
    assert v.evidence["lifted_pairs"]["pairs"] > 0


def test_corner_of_a_triangular_ring(ring):
    R = ring("Tri(Z2,2)")
    v = validate_corner(R, R.index_of("[[1,0],[0,0]]"), 2)
    assert v.status is Status.PASS, v.reason
    assert v.evidence["converse"] == MSG_SKIP_NOT_ABELIAN


def test_corner_pairs_land_in_the_ambient_ring(ring):
    R = ring("Z4")
    counts = lift_corner_pairs(R, make_corner(R, R.one), 1)
    assert counts == {"pairs": counts["pairs"], "lost_zero": 0, "lost_witness": 0}
    assert counts["pairs"] > 0


def test_product_of_local_rings(ring):
    v = validate_product(ring("Z2"), ring("Z4"), 2)
    assert v.status is Status.PASS, v.reason
    assert len(v.evidence["factors"]) == 2
    assert v.evidence["product"]["outcome"] == "HoldsUpToDegree(2)"


def test_lifted_matrix_counterexample_keeps_no_witness(ring):
    M = ring("Mat(Z2,2)")
    pair = verdict(M, Family.J, 1).counterexample
    assert pair is not None
    P = make_product([ring("Z2"), M])
    lifted = lift_pair(P, 1, pair)
    assert poly_mul(lifted.f, lifted.g).is_zero
    assert P.coords(lifted.f.coeffs[0])[0] == 1
    assert all(P.coords(b)[0] == 0 for b in lifted.g.coeffs)
    assert admissible_witnesses(lifted.f, Family.J) == frozenset()


def test_quotient_by_the_radical(ring):
    R = ring("Z4")
    v = validate_quotient(R, Ideal.generated(R, [R.index_of("2")]), 2)
    assert v.status is Status.PASS, v.reason
    assert v.evidence["right_quotient"]["outcome"] == "HoldsUpToDegree(2)"


def test_quotient_outside_the_radical_is_skipped(ring):
    R = ring("Z6")
    v = validate_quotient(R, Ideal.generated(R, [R.index_of("2")]), 1)
    assert v.status is Status.SKIPPED


def test_families_over_z2(ring):
    v = validate_families(ring("Z2"), 2, None, 1)
    assert v.status is Status.PASS, v.reason
    assert v.evidence["T(Z2,2)"]["polynomial_model"] == "TruncSeries(Z2,2)"
    assert v.evidence["S(Z2,2)"]["corner_witness"]["misses"] == 0


def test_triangular_over_the_regular_bimodule(evaluator):
    R = S = evaluator("Z2")
    M = evaluator.registry.bimodule("regular", R, S, evaluator)
    v = validate_triangular(R, S, M, 1)
    assert v.status is Status.PASS, v.reason
    assert v.evidence["diagonal_witness_misses"] == 0
    assert v.evidence["projected_R"] > 0


def test_corner_injection_places_one_slot(evaluator):
    from McCoy.core.constructions import make_triangular

    R = evaluator("Z4")
    S = evaluator("Z2")
    T = make_triangular(R, S, evaluator.registry.bimodule("canonical", R, S, evaluator))
    assert T.coords(corner_injection(T, 0)(R.index_of("3"))) == (3, 0, 0)
    assert T.coords(corner_injection(T, 2)(S.one)) == (0, 0, 1)
    assert jacobson_radical(T)
