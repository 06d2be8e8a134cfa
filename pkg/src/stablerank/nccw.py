"""Noncommutative CW complexes: the cell-wise csr bound and the expansion
into iterated pullbacks for the generic engine."""

from __future__ import annotations

from .algebras import AlgebraExpr, FiniteDim, NccwComplex, Pullback, TensorCommutative
from .core import ceil_div
from .homotopy import bott_stable_bound
from .spaces import Disk, Sphere

__all__ = ["NccwComplex", "csr_upper_nccw", "lower_to_pullback", "stage_bounds"]


def stage_bounds(complex: NccwComplex) -> list[tuple[int, int, int]]:
    """(k, d_k, ceil(k / 2d_k) + 1) for every attached cell."""
    out = []
    for k, blocks in complex.stages:
        d = min(blocks)
        out.append((k, d, bott_stable_bound(k, d)))
    return out


def csr_upper_nccw(complex: NccwComplex) -> int:
    return max((b for _, _, b in stage_bounds(complex)), default=1)


def dimension_bound(complex: NccwComplex) -> int:
    """The coarser bound ceil(n/2) + 1 in the top cell dimension n."""
    n = complex.dimension
    return ceil_div(n, 2) + 1


def lower_to_pullback(complex: NccwComplex) -> AlgebraExpr:
    out: AlgebraExpr = FiniteDim(complex.base)
    for k, blocks in complex.stages:
        f = FiniteDim(blocks)
        out = Pullback(out, TensorCommutative(Disk(k), f), TensorCommutative(Sphere(k - 1), f))
    return out
