import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stablerank import algebras as al
from stablerank import spaces as sp
from stablerank.corpus import fuzz_parse, random_algebra, random_space
from stablerank.dsl import MAX_DEPTH, ParseError, format_expr, format_space, parse, parse_space


def test_parse_examples():
    assert parse("M(2, Cx(S(5)))") == al.Matrix(2, al.TensorCommutative(sp.Sphere(5), al.Scalars()))
    assert parse("F(2,3) (+) C") == al.DirectSum(al.FiniteDim((2, 3)), al.Scalars())
    assert parse("Cx(T(2)) * rot") == al.TensorCommutative(sp.Torus(2), al.IrrationalRotation())
    assert parse("nccw(F(1, 1); 1:F(1))") == al.Nccw(al.NccwComplex((1, 1), ((1, (1,)),)))
    assert parse("pullback(C, C; C)") == al.Pullback(al.Scalars(), al.Scalars(), al.Scalars())


def test_direct_sum_left_associative():
    e = parse("C (+) F(2) (+) F(3)")
    assert e == al.DirectSum(al.DirectSum(al.Scalars(), al.FiniteDim((2,))), al.FiniteDim((3,)))
    assert format_expr(parse("C (+) (F(2) (+) F(3))")) == "C (+) (F(2) (+) F(3))"


def test_whitespace_insignificant():
    assert parse("  M ( 2 ,Cx( prod(S(1),T(2)) ) )  ") == parse("M(2, Cx(prod(S(1), T(2))))")


def test_format_examples():
    assert format_expr(al.Scalars()) == "C"
    assert format_expr(al.TensorCommutative(sp.Torus(6), al.Scalars())) == "Cx(T(6))"
    assert format_space(sp.Wedge(sp.Pt(), sp.CwSkeleton(3))) == "wedge(pt, cw(3))"


def test_truncated_input_location():
    with pytest.raises(ParseError) as info:
        parse("M(2,")
    assert info.value.offset == 4
    assert info.value.column == 5
    assert "C" in info.value.expected


@pytest.mark.parametrize("text,offset", [
    ("", 0), ("F()", 2), ("cuntz(1)", 6), ("C C", 2), ("Cx(S(2)", 7), ("M(0, C)", 2),
    ("Cx(Q(1))", 3), ("F(1, 9999999)", 5),
])
def test_error_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.offset == offset


def test_deep_nesting_is_a_parse_error():
    with pytest.raises(ParseError):
        parse("(" * (MAX_DEPTH + 10) + "C" + ")" * (MAX_DEPTH + 10))


def test_space_parser():
    assert parse_space("susp(prod(T(2), S(3)))") == sp.Susp(sp.Prod(sp.Torus(2), sp.Sphere(3)))


@given(st.integers(0, 10**9))
def test_round_trip(seed):
    e = random_algebra(random.Random(seed))
    text = format_expr(e)
    assert parse(text) == e
    assert format_expr(parse(text)) == text


@given(st.integers(0, 10**9))
def test_space_round_trip(seed):
    x = random_space(random.Random(seed))
    assert parse_space(format_space(x)) == x


@given(st.text(max_size=40))
def test_parse_total(text):
    try:
        parse(text)
    except ParseError as exc:
        assert 0 <= exc.offset <= len(text)


@given(st.text(alphabet="CFMxST()(+),;:*0123456789 prodwegAF", max_size=30))
def test_parse_total_on_near_grammar_text(text):
    try:
        parse(text)
    except ParseError as exc:
        assert 0 <= exc.offset <= len(text)


def test_mutation_fuzz_has_no_crashes():
    texts = [format_expr(random_algebra(random.Random(s))) for s in range(200)]
    assert fuzz_parse(texts) == []
