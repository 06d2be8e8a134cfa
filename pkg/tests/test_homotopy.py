import pytest
from hypothesis import given
from hypothesis import strategies as st

from stablerank.core import RankInterval
from stablerank.homotopy import (SlotKey, bott_stable_bound, fd_inj, fd_surj, slots_class_F,
                                 slots_finite_dimensional, slots_from_ranks,
                                 slots_sphere_tensor)
from stablerank.spaces import gsr_commutative_sphere


@pytest.mark.parametrize("k,ell,want", [(4, 1, 3), (1, 1, 2), (6, 3, 2), (0, 5, 1)])
def test_bott_examples(k, ell, want):
    assert bott_stable_bound(k, ell) == want


@given(st.integers(0, 300), st.integers(1, 20))
def test_bott_monotone(k, ell):
    b = bott_stable_bound(k, ell)
    assert bott_stable_bound(k + 1, ell) >= b
    assert bott_stable_bound(k, ell + 1) <= b
    assert (b == 1) == (k == 0)


def test_finite_dimensional_slots():
    inj, surj = slots_finite_dimensional([1], 1)
    assert surj.hi == 2
    inj, surj = slots_finite_dimensional([2, 3], 4)
    assert inj.hi == 2 and surj.hi == 2
    inj, surj = slots_finite_dimensional([1], 0)
    assert inj.hi == 1 and surj.hi == 1


@given(st.integers(0, 200))
def test_scalar_inj_threshold_encloses_sphere_values(k):
    # inj_k(C) = gsr(C(S^(k+1))) must sit inside the Bott threshold enclosure
    assert fd_inj([1], k).contains(gsr_commutative_sphere(k + 1))


@given(st.lists(st.integers(1, 6), min_size=1, max_size=4), st.integers(0, 40))
def test_fd_slots_use_smallest_block(blocks, k):
    assert fd_surj(blocks, k) == fd_surj([min(blocks)], k)
    assert fd_inj(blocks, k) == fd_inj([min(blocks)], k)


@pytest.mark.parametrize("k", [0, 1, 5])
def test_class_F_slots(k):
    assert slots_class_F(k) == (RankInterval(1, 1), RankInterval(1, 2))


@given(st.integers(0, 1000))
def test_class_F_slots_independent_of_degree(k):
    assert slots_class_F(k) == slots_class_F(0)


def test_slots_from_ranks():
    out = {(b.slot, b.source): b.hi for b in
           slots_from_ranks(RankInterval(1, 1), RankInterval(1, 3), RankInterval(1, 2))}
    assert out[("surj_0", "csr")] == 1
    assert out[("inj_0", "gsr_T")] == 3
    assert out[("inj_0", "csr_T")] == 2 and out[("surj_1", "csr_T")] == 2
    assert slots_from_ranks(RankInterval(), RankInterval(), RankInterval()) == []


def test_sphere_tensor_bound():
    scalars = {f"surj_{k}": fd_surj([1], k) for k in range(8)}
    scalars.update({f"inj_{k}": fd_inj([1], k) for k in range(8)})
    assert slots_sphere_tensor(scalars, 5) == 4
    class_f = {f"{kind}_{k}": iv for k in range(8)
               for kind, iv in zip(("inj", "surj"), slots_class_F(k))}
    assert slots_sphere_tensor(class_f, 5) <= 2
    ones = {"surj_1": RankInterval(1, 1), "surj_3": RankInterval(1, 1), "inj_2": RankInterval(1, 1)}
    assert slots_sphere_tensor(ones, 3) == 1


def test_slot_key():
    assert SlotKey("inj", 4).name == "inj_4"
    with pytest.raises(ValueError):
        SlotKey("both", 1)
