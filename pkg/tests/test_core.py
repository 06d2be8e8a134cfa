import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stablerank.core import (INF, InconsistencyError, RankInterval, TriBool, ceil_div,
                             ext_from_json, ext_json, interval_meet)

ext = st.one_of(st.integers(1, 50), st.just(INF))


@st.composite
def intervals(draw):
    a, b = draw(ext), draw(ext)
    return RankInterval(min(a, b), max(a, b))


@pytest.mark.parametrize("a,b,want", [(9, 2, 5), (4, 4, 1), (5, 2, 3), (0, 3, 0)])
def test_ceil_div_examples(a, b, want):
    assert ceil_div(a, b) == want


def test_ceil_div_rejects_zero_divisor():
    with pytest.raises(ValueError):
        ceil_div(3, 0)


@given(st.integers(1, 10**6), st.integers(1, 1000))
def test_ceil_div_characterization(a, b):
    n = ceil_div(a, b)
    assert (n - 1) * b < a <= n * b
    assert n == math.ceil(a / b)


@pytest.mark.parametrize("x,y,want", [
    (RankInterval(), RankInterval(2, 5), RankInterval(2, 5)),
    (RankInterval(4, 4), RankInterval(1, 4), RankInterval(4, 4)),
    (RankInterval(3, 5), RankInterval(4, INF), RankInterval(4, 5)),
])
def test_meet_examples(x, y, want):
    assert interval_meet(x, y) == want


def test_meet_empty_names_both_sources():
    with pytest.raises(InconsistencyError) as info:
        interval_meet(RankInterval(1, 2), RankInterval(3, 4), first="rule A", second="rule B")
    assert info.value.first == "rule A" and info.value.second == "rule B"


def test_interval_validation():
    with pytest.raises(ValueError):
        RankInterval(3, 2)
    with pytest.raises(ValueError):
        RankInterval(0, 2)
    assert RankInterval().is_unknown
    assert RankInterval.exact(INF).is_exact


def test_interval_str_and_json():
    assert str(RankInterval(4, 4)) == "4"
    assert str(RankInterval(1, INF)) == "[1, inf]"
    assert RankInterval(2, INF).to_json() == {"lo": 2, "hi": "inf"}
    assert RankInterval.from_json({"lo": 2, "hi": "inf"}) == RankInterval(2, INF)
    assert ext_from_json(ext_json(INF)) == INF


@given(intervals(), intervals())
def test_meet_commutative_and_never_wider(x, y):
    if max(x.lo, y.lo) > min(x.hi, y.hi):
        with pytest.raises(InconsistencyError):
            interval_meet(x, y)
        return
    m = interval_meet(x, y)
    assert m == interval_meet(y, x)
    assert m.within(x) and m.within(y)
    assert interval_meet(m, m) == m


@given(intervals(), intervals(), intervals())
def test_meet_associative(x, y, z):
    try:
        left = interval_meet(interval_meet(x, y), z)
    except InconsistencyError:
        left = None
    try:
        right = interval_meet(x, interval_meet(y, z))
    except InconsistencyError:
        right = None
    assert left == right


def test_tribool_refinement():
    assert TriBool.UNKNOWN.refine(TriBool.YES) is TriBool.YES
    assert TriBool.NO.refine(TriBool.UNKNOWN) is TriBool.NO
    with pytest.raises(InconsistencyError):
        TriBool.YES.refine(TriBool.NO)


@given(st.lists(st.sampled_from(list(TriBool)), max_size=8))
def test_tribool_never_oscillates(seq):
    state = TriBool.UNKNOWN
    seen_known = None
    for v in seq:
        try:
            state = state.refine(v)
        except InconsistencyError:
            assert seen_known is not None and v is not seen_known
            continue
        if state.known:
            seen_known = seen_known or state
            assert state is seen_known
