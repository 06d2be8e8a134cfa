"""Pointed compact spaces: expressions, homotopy normalization, dimension
bounds, domination facts and closed-form ranks of commutative algebras."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .core import INF, ExtNat, RankInterval, TriBool, ceil_div


@dataclass(frozen=True)
class Pt:
    pass


@dataclass(frozen=True)
class Sphere:
    d: int

    def __post_init__(self):
        _check_dim(self.d, 0, "Sphere")


@dataclass(frozen=True)
class Torus:
    d: int

    def __post_init__(self):
        _check_dim(self.d, 1, "Torus")


@dataclass(frozen=True)
class Disk:
    d: int

    def __post_init__(self):
        _check_dim(self.d, 1, "Disk")


@dataclass(frozen=True)
class Cube:
    k: int

    def __post_init__(self):
        _check_dim(self.k, 1, "Cube")


@dataclass(frozen=True)
class Prod:
    left: SpaceExpr
    right: SpaceExpr


@dataclass(frozen=True)
class Wedge:
    left: SpaceExpr
    right: SpaceExpr


@dataclass(frozen=True)
class Susp:
    base: SpaceExpr


@dataclass(frozen=True)
class CwSkeleton:
    """Otherwise unknown compact space of covering dimension at most ``n``."""

    n: int

    def __post_init__(self):
        _check_dim(self.n, 0, "CwSkeleton")


SpaceExpr = Union[Pt, Sphere, Torus, Disk, Cube, Prod, Wedge, Susp, CwSkeleton]


def _check_dim(value, minimum, name):
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name}: dimension must be an int")
    if value < minimum:
        raise ValueError(f"{name}: dimension must be >= {minimum}, got {value}")


_ORDER = {Pt: 0, Sphere: 1, Torus: 2, Disk: 3, Cube: 4, CwSkeleton: 5, Susp: 6, Prod: 7, Wedge: 8}


def space_key(x: SpaceExpr) -> tuple:
    """Total structural order used to canonicalize products and wedges."""
    tag = _ORDER[type(x)]
    if isinstance(x, Pt):
        return (tag,)
    if isinstance(x, (Sphere, Torus, Disk)):
        return (tag, x.d)
    if isinstance(x, Cube):
        return (tag, x.k)
    if isinstance(x, CwSkeleton):
        return (tag, x.n)
    if isinstance(x, Susp):
        return (tag, space_key(x.base))
    return (tag, space_key(x.left), space_key(x.right))


def _factors(x: SpaceExpr, kind: type) -> list[SpaceExpr]:
    if isinstance(x, kind):
        return _factors(x.left, kind) + _factors(x.right, kind)
    return [x]


def _rebuild(parts: list[SpaceExpr], kind: type) -> SpaceExpr:
    parts = sorted(parts, key=space_key)
    out = parts[0]
    for p in parts[1:]:
        out = kind(out, p)
    return out


@lru_cache(maxsize=4096)
def normalize_space(x: SpaceExpr) -> SpaceExpr:
    """Homotopy-equivalent canonical form.

    Disks and cubes collapse to a point, points drop out of products and
    wedges, the suspension of a sphere is the next sphere, torus factors of
    a product merge, and products/wedges are flattened, sorted and
    re-associated to the left.
    """
    if isinstance(x, (Disk, Cube)):
        return Pt()
    if isinstance(x, (Pt, Sphere, Torus, CwSkeleton)):
        return x
    if isinstance(x, Susp):
        base = normalize_space(x.base)
        if isinstance(base, Pt):
            return Pt()
        if isinstance(base, Sphere):
            return Sphere(base.d + 1)
        return Susp(base)
    if isinstance(x, Prod):
        parts = [normalize_space(p) for p in _factors(x, Prod)]
        flat = []
        for p in parts:
            flat.extend(_factors(p, Prod))
        torus = sum(p.d for p in flat if isinstance(p, Torus))
        rest = [p for p in flat if not isinstance(p, (Pt, Torus))]
        if torus:
            rest.append(Torus(torus))
        if not rest:
            return Pt()
        return _rebuild(rest, Prod)
    if isinstance(x, Wedge):
        parts = [normalize_space(p) for p in _factors(x, Wedge)]
        flat = []
        for p in parts:
            flat.extend(_factors(p, Wedge))
        rest = [p for p in flat if not isinstance(p, Pt)]
        if not rest:
            return Pt()
        return _rebuild(rest, Wedge)
    raise TypeError(f"not a space expression: {x!r}")


def dim_upper(x: SpaceExpr) -> int:
    """Upper bound on covering dimension."""
    if isinstance(x, Pt):
        return 0
    if isinstance(x, (Sphere, Torus, Disk)):
        return x.d
    if isinstance(x, Cube):
        return x.k
    if isinstance(x, CwSkeleton):
        return x.n
    if isinstance(x, Susp):
        return dim_upper(x.base) + 1
    if isinstance(x, Prod):
        return dim_upper(x.left) + dim_upper(x.right)
    if isinstance(x, Wedge):
        return max(dim_upper(x.left), dim_upper(x.right))
    raise TypeError(f"not a space expression: {x!r}")


@dataclass(frozen=True)
class SpaceFacts:
    dim_upper: ExtNat
    is_contractible: TriBool


def space_facts(x: SpaceExpr) -> SpaceFacts:
    n = normalize_space(x)
    if isinstance(n, Pt):
        contractible = TriBool.YES
    elif isinstance(n, (Sphere, Torus)):
        # nontrivial reduced cohomology
        contractible = TriBool.NO
    else:
        contractible = TriBool.UNKNOWN
    return SpaceFacts(dim_upper(x), contractible)


def gsr_commutative_sphere(d: int) -> int:
    """gsr(C(S^d))."""
    if d <= 4:
        return 1
    if d % 4 == 0:
        return ceil_div(d, 2)
    return ceil_div(d, 2) + 1


def gsr_commutative_torus(d: int) -> int:
    """gsr(C(T^d))."""
    if d <= 4:
        return 1
    return ceil_div(d, 2) + 1


def csr_commutative_torus(d: int) -> int:
    """csr(C(T^d))."""
    return ceil_div(d, 2) + 1


def nistor_bound(n: ExtNat) -> ExtNat:
    """Upper bound for csr(C(X)) when dim X <= n."""
    if n == INF:
        return INF
    return ceil_div(int(n), 2) + 1


def inj_space_scalars(x: SpaceExpr) -> RankInterval:
    """Enclosure of inj_X(C), which equals gsr(C(Susp X)).

    Spheres are exact through the sphere formula.  For tori, the circle
    product identity gsr(C(T^(d+1))) = max{gsr(C(T^d)), gsr(C(Susp T^d))}
    bounds it from above and forces equality when the torus value jumps;
    domination of S^(d+1) by Susp T^d bounds it from below.  Anything else
    gets the dimension bound on C(Susp X).
    """
    n = normalize_space(x)
    if isinstance(n, Pt):
        return RankInterval.exact(1)
    if isinstance(n, Sphere):
        return RankInterval.exact(gsr_commutative_sphere(n.d + 1))
    if isinstance(n, Torus):
        upper = gsr_commutative_torus(n.d + 1)
        if upper > gsr_commutative_torus(n.d):
            return RankInterval.exact(upper)
        return RankInterval(gsr_commutative_sphere(n.d + 1), upper)
    d = dim_upper(n) + 1
    if d <= 4:
        return RankInterval.exact(1)
    return RankInterval.at_most(nistor_bound(d))


def sphere_product_dimension(x: SpaceExpr) -> int | None:
    """Total dimension if x is a product of spheres and tori, else None."""
    if isinstance(x, Sphere):
        return x.d
    if isinstance(x, Torus):
        return x.d
    if isinstance(x, Prod):
        a = sphere_product_dimension(x.left)
        b = sphere_product_dimension(x.right)
        if a is None or b is None:
            return None
        return a + b
    return None


def dominated_spaces(x: SpaceExpr) -> list[SpaceExpr]:
    """Spaces known to be homotopically dominated by x (excluding x)."""
    n = normalize_space(x)
    out: list[SpaceExpr] = []
    if isinstance(n, Wedge):
        out.extend(_factors(n, Wedge))
    if isinstance(n, Susp):
        k = sphere_product_dimension(n.base)
        if k is not None:
            out.append(Sphere(k + 1))
    return out


def dominates(x: SpaceExpr, y: SpaceExpr) -> TriBool:
    """YES when a known domination fact shows x dominates y; never NO."""
    nx, ny = normalize_space(x), normalize_space(y)
    if nx == ny or isinstance(ny, Pt):
        return TriBool.YES
    for z in dominated_spaces(nx):
        if normalize_space(z) == ny:
            return TriBool.YES
    return TriBool.UNKNOWN


def circle_split(x: SpaceExpr) -> SpaceExpr | None:
    """If normalized x is T x Y, return Y (normalized)."""
    n = normalize_space(x)
    if isinstance(n, Sphere) and n.d == 1:
        return Pt()
    if isinstance(n, Torus):
        return Pt() if n.d == 1 else Torus(n.d - 1)
    if isinstance(n, Prod):
        parts = _factors(n, Prod)
        for i, p in enumerate(parts):
            if isinstance(p, Torus) or (isinstance(p, Sphere) and p.d == 1):
                rest = parts[:i] + parts[i + 1:]
                if isinstance(p, Torus) and p.d > 1:
                    rest.append(Torus(p.d - 1))
                return normalize_space(_rebuild(rest, Prod))
    return None


def suspension_base(x: SpaceExpr) -> SpaceExpr | None:
    """If normalized x is a reduced suspension, return its base."""
    n = normalize_space(x)
    if isinstance(n, Sphere) and n.d >= 1:
        return Sphere(n.d - 1)
    if isinstance(n, Torus) and n.d == 1:
        return Sphere(0)
    if isinstance(n, Susp):
        return n.base
    return None


def has_odd_cohomology_retract(x: SpaceExpr) -> bool:
    """True if x retracts onto an odd sphere or a torus."""
    n = normalize_space(x)
    if isinstance(n, Torus):
        return True
    if isinstance(n, Sphere):
        return n.d % 2 == 1
    if isinstance(n, (Prod, Wedge)):
        return any(has_odd_cohomology_retract(p) for p in _factors(n, type(n)))
    return False


def iter_spaces(x: SpaceExpr):
    yield x
    if isinstance(x, Susp):
        yield from iter_spaces(x.base)
    elif isinstance(x, (Prod, Wedge)):
        yield from iter_spaces(x.left)
        yield from iter_spaces(x.right)
