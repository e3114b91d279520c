# tests/test_ring.py

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from McCoy.core.constructions import make_zmod
from McCoy.core.radical import units
from McCoy.core.ring import (
    Ideal,
    RingMap,
    center,
    check_axioms,
    check_isomorphism,
    idempotents,
    is_abelian,
    is_commutative,
    is_local,
    regular_elements,
)
from McCoy.utils.exceptions import ConstructionError
from McCoy.utils.registry import Registry
from tests.conftest import DESK_RINGS


@pytest.mark.parametrize("expr", DESK_RINGS)
def test_desk_rings_satisfy_axioms_exhaustively(ring, expr):
    R = ring(expr)
    report = check_axioms(R)
    assert report.exhaustive
    assert report.ok, report.failures
    assert R.zero == 0


def test_zmod_basics(ring):
    Z2, Z4, Z6 = ring("Z2"), ring("Z4"), ring("Z6")
    assert units(Z2) == {1}
    assert Z4.mul(2, 2) == 0
    assert units(Z6) == {1, 5}


def test_zero_ring_has_one_equal_to_zero(ring):
    Z1 = ring("Z1")
    assert Z1.order == 1
    assert Z1.one == Z1.zero
    assert not is_local(Z1)


def test_zmod_rejects_zero_modulus():
    with pytest.raises(ConstructionError):
        make_zmod(0)


@given(st.integers(min_value=1, max_value=40))
@settings(max_examples=25, deadline=None)
def test_zmod_units_are_coprime_residues(n):
    R = make_zmod(n)
    assert units(R) == {a for a in range(n) if math.gcd(a, n) == 1}


@given(
    st.integers(min_value=2, max_value=30).flatmap(
        lambda n: st.tuples(st.just(n), *[st.integers(min_value=0, max_value=n - 1)] * 3)
    )
)
@settings(max_examples=60, deadline=None)
def test_zmod_distributes(values):
    n, a, b, c = values
    R = make_zmod(n)
    assert R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c))
    assert R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c))
    assert R.add(a, R.neg(a)) == R.zero


def test_scalar_and_table_paths_agree(ring):
    R = ring("Mat(Z2,2)")
    everything = np.arange(R.order)
    for a in range(R.order):
        assert R.mul_v(a, everything).tolist() == [R.mul(a, b) for b in range(R.order)]


def test_idempotents_and_locality(ring):
    Z2, Z6, M = ring("Z2"), ring("Z6"), ring("Mat(Z2,2)")
    assert idempotents(Z2) == {0, 1}
    assert is_abelian(Z2) and is_local(Z2)
    assert idempotents(Z6) == {0, 1, 3, 4}
    assert not is_local(Z6)
    assert not is_abelian(M)


def test_center_and_regular_elements(ring):
    M = ring("Mat(Z2,2)")
    assert M.format_set(center(M)) == ["[[0,0],[0,0]]", "[[1,0],[0,1]]"]
    assert regular_elements(ring("Z6")) == {1, 5}
    assert is_commutative(ring("Z6"))
    assert not is_commutative(M)


def test_generated_ideal(ring):
    Z4 = ring("Z4")
    I = Ideal.generated(Z4, [2])
    assert I.members == {0, 2}
    I.verify()
    with pytest.raises(ConstructionError):
        Ideal(Z4, frozenset({0, 1})).verify()


def test_swap_is_an_involution(ring):
    P = ring("Prod(Z2,Z2)")
    swap = Registry().sigma("swap", P)
    assert not swap.is_identity
    assert swap.power(2).is_identity
    assert swap.compose(RingMap.identity(P)).table == swap.table


def test_truncated_series_models_constant_diagonal_family(ring):
    T, series = ring("T(Z2,3)"), ring("TruncSeries(Z2,3)")
    table = [series.index_of(T.element_label(x)) for x in range(T.order)]
    iso = check_isomorphism(T, series, table)
    assert iso.is_bijective()


def test_non_bijection_is_rejected(ring):
    Z4 = ring("Z4")
    with pytest.raises(ConstructionError):
        check_isomorphism(Z4, Z4, [0, 0, 0, 0])
