# tests/test_expr.py

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from McCoy.utils.evaluator import Evaluator
from McCoy.utils.exceptions import ConstructionError, ParseError, UnknownName
from McCoy.utils.expr import (
    Corner,
    FamilyExpr,
    Mat,
    Opp,
    Prod,
    Quot,
    SkewTri,
    Sub,
    Tri,
    Triangular,
    TruncSeries,
    Zmod,
    parse_element_list,
    parse_ring_expr,
)
from McCoy.utils.registry import Registry, describe

leaves = st.integers(min_value=1, max_value=9).map(Zmod)
sizes = st.integers(min_value=1, max_value=4)
labels = st.sampled_from(["0", "1", "(1,0)", "[[0,1],[0,0]]", "(0,(1,1))"])


def _extend(children):
    return st.one_of(
        st.builds(TruncSeries, children, sizes),
        st.lists(children, min_size=1, max_size=3).map(lambda fs: Prod(tuple(fs))),
        st.builds(Mat, children, sizes),
        st.builds(Tri, children, sizes),
        st.builds(SkewTri, children, sizes, st.sampled_from(["swap", "frobenius"])),
        st.builds(FamilyExpr, st.sampled_from("STAB"), children, sizes, st.sampled_from([None, "swap"])),
        st.builds(Triangular, children, children, st.sampled_from(["regular", "canonical"])),
        st.builds(Corner, children, labels),
        st.builds(Quot, children, st.lists(labels, max_size=3).map(tuple)),
        st.builds(Opp, children),
        st.builds(Sub, children, st.lists(labels, max_size=3).map(tuple)),
    )


ring_exprs = st.recursive(leaves, _extend, max_leaves=6)


@given(ring_exprs)
@settings(max_examples=200, deadline=None)
def test_print_then_parse_is_identity(node):
    assert parse_ring_expr(str(node)) == node


@pytest.mark.parametrize(
    "text, node",
    [
        ("Z4", Zmod(4)),
        ("T(Z2,3)", FamilyExpr("T", Zmod(2), 3)),
        ("T(Z2,3,id)", FamilyExpr("T", Zmod(2), 3)),
        ("Corner(Prod(Z2,Z4), e=(1,0))", Corner(Prod((Zmod(2), Zmod(4))), "(1,0)")),
        (" Quot( Tri(Z2, 2), { [[0, 1], [0, 0]] } )", Quot(Tri(Zmod(2), 2), ("[[0,1],[0,0]]",))),
        ("Zmod(6)", Zmod(6)),
    ],
)
def test_parse_examples(text, node):
    assert parse_ring_expr(text) == node


@pytest.mark.parametrize(
    "text, position",
    [
        ("Mat(Z2,0)", 7),
        ("Mat(Z2 2)", 7),
        ("Z4)", 2),
        ("", 0),
        ("Prod(Z2,", 8),
    ],
)
def test_parse_errors_report_byte_offsets(text, position):
    with pytest.raises(ParseError) as info:
        parse_ring_expr(text)
    assert info.value.position == position
    assert info.value.expected


def test_offsets_count_utf8_bytes():
    with pytest.raises(ParseError) as info:
        parse_ring_expr("Z4\u00a0)")
    assert info.value.position == len("Z4\u00a0".encode("utf-8")) == 4


def test_unknown_names():
    with pytest.raises(UnknownName):
        parse_ring_expr("Frob(Z2)")
    registry = Registry()
    with pytest.raises(UnknownName):
        parse_ring_expr("SkewTri(Z2,2,twist)", registry.has_sigma, registry.has_bimodule)
    with pytest.raises(UnknownName):
        parse_ring_expr("Triangular(Z2,Z2,weird)", registry.has_sigma, registry.has_bimodule)


def test_element_lists():
    assert parse_element_list("(1,0), (0, 1),2") == ["(1,0)", "(0,1)", "2"]
    assert parse_element_list("") == []


def test_evaluator_memoizes_by_canonical_text():
    evaluator = Evaluator()
    assert evaluator("Prod( Z2 , Z4 )") is evaluator("Prod(Z2,Z4)")
    assert evaluator("Corner(Prod(Z2,Z4),e=(1,0))").label == "Corner(Prod(Z2,Z4),e=(1,0))"


def test_evaluator_rejects_non_idempotent_corner():
    with pytest.raises(ConstructionError):
        Evaluator()("Corner(Z4,e=2)")


def test_registry_file(tmp_path):
    path = tmp_path / "registry.toml"
    path.write_text(
        '[sigma.flip]\n'
        'ring = "Prod(Z2,Z2)"\n'
        'map = { "(1,0)" = "(0,1)", "(0,1)" = "(1,0)" }\n',
        encoding="utf-8",
    )
    registry = Registry(str(path))
    assert "flip" in describe(registry)["sigma"]
    evaluator = Evaluator(registry)
    flipped = evaluator("SkewTri(Prod(Z2,Z2),2,flip)")
    swapped = evaluator("SkewTri(Prod(Z2,Z2),2,swap)")
    assert flipped.order == swapped.order == 64
    assert (flipped.table("mul") == swapped.table("mul")).all()


def test_missing_registry_file_is_a_construction_error(tmp_path):
    with pytest.raises(ConstructionError):
        Registry(str(tmp_path / "missing.toml"))
