# tests/test_poly.py

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from McCoy.core.poly import (
    Poly,
    embed_poly,
    enumerate_zero_pairs,
    format_poly,
    iter_polys,
    naive_zero_pairs,
    pack_coefficients,
    poly_add,
    poly_count,
    poly_from_rank,
    poly_mul,
    poly_neg,
    poly_rank,
    poly_scale_right,
    search_cost,
)
from McCoy.utils.exceptions import BudgetExceeded, ConstructionError, RingMismatch

SMALL = ["Z2", "Z4", "Z6", "Prod(Z2,Z2)", "Tri(Z2,2)", "T(Z2,3)", "Opp(Tri(Z2,2))"]


def polys(R, dmax=2):
    return st.lists(st.integers(min_value=0, max_value=R.order - 1), max_size=dmax + 1).map(lambda c: Poly(R, c))


def test_normalization_and_degree(ring):
    Z4 = ring("Z4")
    assert Poly(Z4, (1, 2, 0, 0)).coeffs == (1, 2)
    assert Poly(Z4, (0, 0)).is_zero
    assert Poly(Z4, (3,)).degree == 0
    assert format_poly(Poly(Z4, (1, 0, 3))) == "1 + 3*x^2"
    assert format_poly(Poly(Z4, ())) == "0"


def test_characteristic_two_square(ring):
    Z2 = ring("Z2")
    f = Poly(Z2, (1, 1))
    assert poly_mul(f, f).coeffs == (1, 0, 1)
    assert poly_mul(f, Poly(Z2, ())).is_zero


def test_mixed_rings_are_rejected(ring):
    with pytest.raises(RingMismatch):
        poly_mul(Poly(ring("Z2"), (1,)), Poly(ring("Z4"), (1,)))


@pytest.mark.parametrize("expr", ["Z4", "Tri(Z2,2)", "Prod(Z2,Z4)"])
@given(data=st.data())
@settings(max_examples=40, deadline=None)
def test_multiplication_laws(ring, expr, data):
    R = ring(expr)
    f, g, h = (data.draw(polys(R)) for _ in range(3))
    assert poly_mul(poly_mul(f, g), h) == poly_mul(f, poly_mul(g, h))
    assert poly_mul(f, poly_add(g, h)) == poly_add(poly_mul(f, g), poly_mul(f, h))
    assert poly_add(f, poly_neg(f)).is_zero
    product = poly_mul(f, g)
    if not f.is_zero and not g.is_zero:
        assert product.degree <= f.degree + g.degree
        if R.mul(f.coeffs[-1], g.coeffs[-1]) != R.zero:
            assert product.degree == f.degree + g.degree


@given(st.integers(min_value=2, max_value=7), st.integers(min_value=0, max_value=3), st.data())
@settings(max_examples=50, deadline=None)
def test_rank_is_the_graded_order(n, dmax, data):
    rank = data.draw(st.integers(min_value=0, max_value=poly_count(n, dmax) - 1))
    coeffs = poly_from_rank(rank, n)
    assert poly_rank(coeffs, n) == rank
    assert coeffs[-1] != 0
    assert len(coeffs) <= dmax + 1


def test_iteration_matches_ranks():
    listed = list(iter_polys(3, 2))
    assert len(listed) == poly_count(3, 2)
    assert listed == [poly_from_rank(r, 3) for r in range(len(listed))]
    assert listed == sorted(listed, key=lambda c: (len(c), c))


def test_packing(ring):
    Z4 = ring("Z4")
    constant = Poly(Z4, (3,))
    assert pack_coefficients([constant], 1) == constant
    assert pack_coefficients([constant], 5) == constant
    assert pack_coefficients([Poly(Z4, (1,)), Poly(Z4, (2,))], 2).coeffs == (1, 0, 2)
    packed = pack_coefficients([Poly(Z4, (1, 2)), Poly(Z4, (3, 1))], 2)
    assert packed.coeffs == (1, 2, 3, 1)
    assert sorted(c for c in packed.coeffs if c) == [1, 1, 2, 3]
    with pytest.raises(ConstructionError):
        pack_coefficients([Poly(Z4, (1, 2))], 1)


def test_zero_pairs_over_a_field_are_empty(ring):
    assert list(enumerate_zero_pairs(ring("Z5"), 2)) == []


def test_zero_pairs_of_z4_in_degree_zero(ring):
    pairs = [(p.f.coeffs, p.g.coeffs) for p in enumerate_zero_pairs(ring("Z4"), 0)]
    assert pairs == [((2,), (2,))]


@pytest.mark.parametrize("expr", SMALL)
@pytest.mark.parametrize("dmax", [0, 1, 2])
def test_pruned_search_matches_naive_loop(ring, expr, dmax):
    R = ring(expr)
    pruned = [(p.f.coeffs, p.g.coeffs) for p in enumerate_zero_pairs(R, dmax)]
    naive = [(p.f.coeffs, p.g.coeffs) for p in naive_zero_pairs(R, dmax)]
    assert set(pruned) == set(naive)
    assert len(pruned) == len(naive)
    assert pruned == sorted(pruned, key=lambda fg: ((len(fg[0]), fg[0]), (len(fg[1]), fg[1])))
    for f, g in pruned:
        assert poly_mul(Poly(R, f), Poly(R, g)).is_zero


def test_search_budget_refusal(ring):
    R = ring("Mat(Z2,2)")
    assert search_cost(R, 3) > 1000
    with pytest.raises(BudgetExceeded) as info:
        list(enumerate_zero_pairs(R, 3, budget=1000))
    assert info.value.budget == 1000
    assert info.value.estimate == search_cost(R, 3)


def test_embed_poly_through_a_reduction(ring):
    Z4, Z2 = ring("Z4"), ring("Z2")
    f = Poly(Z4, (1, 2, 3))
    assert embed_poly(f, Z2, lambda a: a % 2).coeffs == (1, 0, 1)
    assert embed_poly(Poly(Z4, (2,)), Z2, lambda a: a % 2).is_zero


def test_scale_right_multiplies_every_coefficient(ring):
    Z4 = ring("Z4")
    assert poly_scale_right(Poly(Z4, (1, 3)), 2).coeffs == (2, 2)
    assert poly_scale_right(Poly(Z4, (2, 2)), 2).is_zero
