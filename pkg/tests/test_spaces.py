import pytest
from hypothesis import given
from hypothesis import strategies as st

from stablerank.core import RankInterval, TriBool, ceil_div
from stablerank.spaces import (Cube, CwSkeleton, Disk, Prod, Pt, Sphere, Susp, Torus, Wedge,
                               circle_split, csr_commutative_torus, dim_upper, dominates,
                               gsr_commutative_sphere, gsr_commutative_torus,
                               inj_space_scalars, normalize_space, space_facts,
                               suspension_base)


def spaces():
    leaves = st.one_of(
        st.just(Pt()),
        st.builds(Sphere, st.integers(0, 12)),
        st.builds(Torus, st.integers(1, 10)),
        st.builds(Disk, st.integers(1, 8)),
        st.builds(Cube, st.integers(1, 5)),
        st.builds(CwSkeleton, st.integers(0, 9)),
    )
    return st.recursive(leaves, lambda inner: st.one_of(
        st.builds(Prod, inner, inner), st.builds(Wedge, inner, inner), st.builds(Susp, inner)),
        max_leaves=6)


@pytest.mark.parametrize("x,want", [
    (Disk(7), Pt()),
    (Prod(Pt(), Sphere(3)), Sphere(3)),
    (Wedge(Pt(), Torus(2)), Torus(2)),
    (Susp(Pt()), Pt()),
    (Susp(Sphere(4)), Sphere(5)),
    (Prod(Torus(2), Prod(Cube(3), Torus(1))), Torus(3)),
])
def test_normalize_examples(x, want):
    assert normalize_space(x) == want


@pytest.mark.parametrize("x,want", [
    (Torus(3), 3), (Prod(Sphere(2), Torus(2)), 4), (Wedge(Sphere(5), Sphere(8)), 8),
    (Susp(CwSkeleton(3)), 4), (Pt(), 0), (Cube(2), 2),
])
def test_dim_upper_examples(x, want):
    assert dim_upper(x) == want


def test_point_facts():
    f = space_facts(Pt())
    assert f.dim_upper == 0 and f.is_contractible is TriBool.YES


@pytest.mark.parametrize("d,want", [(5, 4), (4, 1), (8, 4), (12, 6), (7, 5), (0, 1)])
def test_sphere_gsr(d, want):
    assert gsr_commutative_sphere(d) == want


@pytest.mark.parametrize("d,want", [(4, 1), (5, 4), (9, 6)])
def test_torus_gsr(d, want):
    assert gsr_commutative_torus(d) == want


@pytest.mark.parametrize("d,want", [(1, 2), (3, 3), (6, 4)])
def test_torus_csr(d, want):
    assert csr_commutative_torus(d) == want


@pytest.mark.parametrize("x,want", [
    (Sphere(4), RankInterval(4, 4)), (Pt(), RankInterval(1, 1)), (Torus(4), RankInterval(4, 4)),
])
def test_inj_space_scalars_examples(x, want):
    assert inj_space_scalars(x) == want


@pytest.mark.parametrize("x,y,want", [
    (Susp(Torus(4)), Sphere(5), TriBool.YES),
    (Wedge(Sphere(2), Sphere(7)), Sphere(7), TriBool.YES),
    (Sphere(2), Sphere(3), TriBool.UNKNOWN),
])
def test_dominates_examples(x, y, want):
    assert dominates(x, y) is want


def test_structural_helpers():
    assert circle_split(Torus(3)) == Torus(2)
    assert circle_split(Prod(Sphere(1), Sphere(4))) == Sphere(4)
    assert circle_split(Sphere(2)) is None
    assert suspension_base(Sphere(3)) == Sphere(2)
    assert suspension_base(Susp(Torus(2))) == Torus(2)


def test_dimensions_validated():
    with pytest.raises(ValueError):
        Torus(0)
    with pytest.raises(ValueError):
        Sphere(-1)


@given(spaces())
def test_normalize_idempotent_and_dimension_non_increasing(x):
    n = normalize_space(x)
    assert normalize_space(n) == n
    assert dim_upper(n) <= dim_upper(x)


@given(spaces())
def test_dominates_reflexive_never_no(x):
    n = normalize_space(x)
    assert dominates(n, n) is TriBool.YES
    assert dominates(x, Sphere(3)) is not TriBool.NO


@given(st.integers(0, 200))
def test_sphere_formula_range(d):
    v = gsr_commutative_sphere(d)
    if d <= 4:
        assert v == 1
    else:
        assert v in (ceil_div(d, 2), ceil_div(d, 2) + 1)


@given(st.integers(1, 200))
def test_torus_gsr_below_csr(d):
    assert gsr_commutative_torus(d) <= csr_commutative_torus(d)


@given(st.integers(1, 60))
def test_torus_inj_matches_circle_product(d):
    # gsr(C(T^(d+1))) = max{gsr(C(T^d)), inj_{T^d}(C)} must be satisfiable
    iv = inj_space_scalars(Torus(d))
    target = gsr_commutative_torus(d + 1)
    assert max(gsr_commutative_torus(d), iv.hi) == target
    assert iv.lo >= gsr_commutative_sphere(d + 1)
