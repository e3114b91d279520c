# tests/test_radical.py

import pytest

from McCoy.core.radical import (
    in_jacobson,
    is_j_semisimple,
    is_reduced,
    jacobson_radical,
    nilpotents,
    radical_report,
    units,
)
from McCoy.core.ring import idempotents, is_commutative
from tests.conftest import DESK_RINGS


def test_units(ring):
    assert units(ring("Z4")) == {1, 3}
    assert len(units(ring("Mat(Z2,2)"))) == 6
    T = ring("T(Z2,2)")
    assert T.format_set(units(T)) == ["(1,0)", "(1,1)"]


@pytest.mark.parametrize(
    "expr, expected",
    [
        ("Z4", ["0", "2"]),
        ("Z6", ["0"]),
        ("Z5", ["0"]),
        ("Mat(Z2,2)", ["[[0,0],[0,0]]"]),
        ("Tri(Z2,2)", ["[[0,0],[0,0]]", "[[0,1],[0,0]]"]),
        ("T(Z2,2)", ["(0,0)", "(0,1)"]),
    ],
)
def test_known_radicals(ring, expr, expected):
    R = ring(expr)
    assert R.format_set(jacobson_radical(R)) == expected


def test_nilpotents(ring):
    assert nilpotents(ring("Z4")) == {0, 2}
    assert nilpotents(ring("Z6")) == {0}
    M = ring("Mat(Z2,2)")
    assert M.unit_matrix(0, 1) in nilpotents(M)
    assert nilpotents(M) > jacobson_radical(M)
    assert is_reduced(ring("Z6"))
    assert not is_reduced(ring("Z4"))


@pytest.mark.parametrize("expr", DESK_RINGS)
def test_radical_invariants(ring, expr):
    R = ring(expr)
    J = jacobson_radical(R)
    assert R.zero in J
    if R.order > 1:
        assert not J & units(R)
    assert not (J & idempotents(R)) - {R.zero}
    if is_commutative(R):
        assert nilpotents(R) <= J
    for x in range(R.order):
        assert in_jacobson(R, x) == (x in J)


def test_single_element_test_agrees_before_the_scan(ring):
    R = ring("Quot(Tri(Z2,2),{[[0,1],[0,0]]})")
    fresh = ring("Prod(Z2,Z2)")
    assert [in_jacobson(fresh, x) for x in range(fresh.order)] == [x == 0 for x in range(fresh.order)]
    assert is_j_semisimple(R)


def test_radical_report(ring):
    report = radical_report(ring("T(Z2,2)")).to_dict()
    assert report["jacobson"] == ["(0,0)", "(0,1)"]
    assert report["units"] == ["(1,0)", "(1,1)"]
    assert report["is_local"]
    assert not report["is_j_semisimple"]
