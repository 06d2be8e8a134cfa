import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stablerank.algebras import FiniteDim, Nccw, NccwComplex, Pullback, TensorCommutative
from stablerank.core import ceil_div
from stablerank.engine import infer
from stablerank.nccw import csr_upper_nccw, dimension_bound, lower_to_pullback, stage_bounds
from stablerank.spaces import Disk, Sphere

blocks = st.lists(st.integers(1, 5), min_size=1, max_size=3).map(tuple)
complexes = st.builds(
    NccwComplex, blocks,
    st.lists(st.tuples(st.integers(1, 8), blocks), max_size=3).map(
        lambda s: tuple(sorted(s, key=lambda t: t[0]))))


def test_csr_upper_examples():
    assert csr_upper_nccw(NccwComplex((1,), tuple((k, (1,)) for k in range(1, 6)))) == 4
    assert csr_upper_nccw(NccwComplex((1,), ((4, (2,)),))) == 2
    assert csr_upper_nccw(NccwComplex((3, 2))) == 1


def test_lowering_examples():
    assert lower_to_pullback(NccwComplex((2,))) == FiniteDim((2,))
    one = lower_to_pullback(NccwComplex((1, 1), ((1, (1,)),)))
    assert one == Pullback(FiniteDim((1, 1)), TensorCommutative(Disk(1), FiniteDim((1,))),
                           TensorCommutative(Sphere(0), FiniteDim((1,))))
    two = lower_to_pullback(NccwComplex((1,), ((1, (1,)), (2, (2,)))))
    assert isinstance(two, Pullback) and isinstance(two.b, Pullback)
    assert not isinstance(two.b.b, Pullback)


def test_stage_bounds():
    assert stage_bounds(NccwComplex((1,), ((3, (2, 5)),))) == [(3, 2, 2)]


def test_invalid_complex():
    with pytest.raises(ValueError):
        NccwComplex((1,), ((0, (1,)),))
    with pytest.raises(ValueError):
        NccwComplex((1,), ((2, ()),))


@given(complexes)
def test_specialized_bound_below_dimension_bound(cx):
    assert csr_upper_nccw(cx) <= dimension_bound(cx)


@settings(max_examples=50, deadline=None)
@given(complexes)
def test_generic_route_agrees_with_specialized_bound(cx):
    # both are upper bounds; the report shows their meet
    lowered = infer(lower_to_pullback(cx)).root_state.csr
    assert lowered.hi <= csr_upper_nccw(cx)
    assert infer(Nccw(cx)).root_state.csr.hi <= csr_upper_nccw(cx)


@pytest.mark.parametrize("n", range(1, 11))
def test_unit_blocks_match_dimension_bound(n):
    cx = NccwComplex((1,), tuple((k, (1,)) for k in range(1, n + 1)))
    assert csr_upper_nccw(cx) == ceil_div(n, 2) + 1
