"""Expression trees for unital C*-algebras built from standard constructions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .spaces import SpaceExpr, iter_spaces


def _blocks(values, name: str) -> tuple[int, ...]:
    values = tuple(values)
    if not values:
        raise ValueError(f"{name}: needs at least one block")
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int) or v < 1:
            raise ValueError(f"{name}: block sizes must be positive integers, got {v!r}")
    return values


@dataclass(frozen=True)
class Scalars:
    pass


@dataclass(frozen=True)
class FiniteDim:
    blocks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", _blocks(self.blocks, "FiniteDim"))


@dataclass(frozen=True)
class Matrix:
    n: int
    a: AlgebraExpr

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise ValueError("Matrix: size must be a positive integer")


@dataclass(frozen=True)
class DirectSum:
    a: AlgebraExpr
    b: AlgebraExpr


@dataclass(frozen=True)
class TensorCommutative:
    """C(space) (x) a."""

    space: SpaceExpr
    a: AlgebraExpr


@dataclass(frozen=True)
class Pullback:
    """b (+)_d c, with at least one of the maps into d surjective."""

    b: AlgebraExpr
    c: AlgebraExpr
    d: AlgebraExpr
    surjective: bool = True

    def __post_init__(self):
        if not self.surjective:
            raise ValueError("Pullback: one leg must be surjective")


@dataclass(frozen=True)
class Extension:
    """Some algebra with ideal j and quotient b."""

    j: AlgebraExpr
    b: AlgebraExpr


@dataclass(frozen=True)
class InductiveLimitCofinal:
    """Inductive limit in which every listed algebra occurs cofinally."""

    items: tuple[AlgebraExpr, ...]

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))
        if not self.items:
            raise ValueError("InductiveLimitCofinal: needs at least one algebra")


@dataclass(frozen=True)
class NccwComplex:
    """Base finite-dimensional algebra plus attached cells (k, F_k)."""

    base: tuple[int, ...]
    stages: tuple[tuple[int, tuple[int, ...]], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "base", _blocks(self.base, "NccwComplex base"))
        stages = []
        for k, blocks in self.stages:
            if isinstance(k, bool) or not isinstance(k, int) or k < 1:
                raise ValueError("NccwComplex: stage dimension must be >= 1")
            stages.append((k, _blocks(blocks, "NccwComplex stage")))
        object.__setattr__(self, "stages", tuple(stages))

    @property
    def dimension(self) -> int:
        return max((k for k, _ in self.stages), default=0)


@dataclass(frozen=True)
class Nccw:
    complex: NccwComplex


# atoms


@dataclass(frozen=True)
class JiangSuStable:
    """a (x) Z."""

    a: AlgebraExpr


@dataclass(frozen=True)
class IrrationalRotation:
    pass


@dataclass(frozen=True)
class Cuntz:
    n: int

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 2:
            raise ValueError("Cuntz: n must be an integer >= 2")


@dataclass(frozen=True)
class CuntzInfinity:
    pass


@dataclass(frozen=True)
class KirchbergIBN:
    """A Kirchberg algebra with the invariant basis number property."""


@dataclass(frozen=True)
class SimpleInfDimAF:
    pass


@dataclass(frozen=True)
class PurelyInfiniteSimpleCorner:
    pass


@dataclass(frozen=True)
class RealRankZero:
    """The algebra a, asserted to have real rank zero."""

    a: AlgebraExpr


AlgebraExpr = Union[
    Scalars, FiniteDim, Matrix, DirectSum, TensorCommutative, Pullback, Extension,
    InductiveLimitCofinal, Nccw, JiangSuStable, IrrationalRotation, Cuntz,
    CuntzInfinity, KirchbergIBN, SimpleInfDimAF, PurelyInfiniteSimpleCorner, RealRankZero,
]

ATOMS = (IrrationalRotation, Cuntz, CuntzInfinity, KirchbergIBN, SimpleInfDimAF,
         PurelyInfiniteSimpleCorner)


def children(e: AlgebraExpr) -> tuple[AlgebraExpr, ...]:
    if isinstance(e, (Matrix, JiangSuStable, RealRankZero, TensorCommutative)):
        return (e.a,)
    if isinstance(e, DirectSum):
        return (e.a, e.b)
    if isinstance(e, Pullback):
        return (e.b, e.c, e.d)
    if isinstance(e, Extension):
        return (e.j, e.b)
    if isinstance(e, InductiveLimitCofinal):
        return e.items
    return ()


def expr_size(e: AlgebraExpr) -> int:
    size = 1
    if isinstance(e, TensorCommutative):
        size += sum(1 for _ in iter_spaces(e.space))
    if isinstance(e, Nccw):
        size += 1 + len(e.complex.stages)
    return size + sum(expr_size(c) for c in children(e))


def subexpr_at(e: AlgebraExpr, path: str) -> AlgebraExpr:
    """Follow a dotted path of child indices ("" is the root)."""
    node = e
    if not path:
        return node
    for part in path.split("."):
        kids = children(node)
        idx = int(part)
        if not 0 <= idx < len(kids):
            raise KeyError(f"no child {idx} at path {path!r}")
        node = kids[idx]
    return node


def block_sizes(e: AlgebraExpr) -> tuple[int, ...] | None:
    """Matrix block sizes if e is visibly finite-dimensional."""
    if isinstance(e, Scalars):
        return (1,)
    if isinstance(e, FiniteDim):
        return e.blocks
    if isinstance(e, Matrix):
        inner = block_sizes(e.a)
        return None if inner is None else tuple(e.n * b for b in inner)
    if isinstance(e, DirectSum):
        a, b = block_sizes(e.a), block_sizes(e.b)
        return None if a is None or b is None else a + b
    if isinstance(e, Nccw) and not e.complex.stages:
        return e.complex.base
    return None


def absorbs_class_F(e: AlgebraExpr) -> bool:
    """True when anything tensored with e lands in the weak-equivalence class
    (Z-stable, O_n-stable, simple infinite-dimensional AF)."""
    if isinstance(e, (JiangSuStable, Cuntz, SimpleInfDimAF)):
        return True
    if isinstance(e, (Matrix, TensorCommutative, RealRankZero)):
        return absorbs_class_F(e.a)
    return False
