"""Stability thresholds for GL_{m-1} -> GL_m and the inj/surj slot calculus.

A slot records the least m from which the block inclusion is injective
(``inj``) or surjective (``surj``) on a homotopy set; ``inj`` at degree k
refers to pi_k, and ``inj`` over a space X to based classes [X, GL_m]_*.
Only upper thresholds are modelled; unstable homotopy groups are not.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .core import INF, ExtNat, RankInterval, ceil_div

INJ = "inj"
SURJ = "surj"


@dataclass(frozen=True, order=True)
class SlotKey:
    kind: str
    degree: int

    def __post_init__(self):
        if self.kind not in (INJ, SURJ):
            raise ValueError(f"unknown slot kind {self.kind!r}")
        if self.degree < 0:
            raise ValueError("slot degree must be >= 0")

    @property
    def name(self) -> str:
        return f"{self.kind}_{self.degree}"


def slot_name(kind: str, degree: int) -> str:
    return SlotKey(kind, degree).name


def bott_stable_bound(k: int, ell: int) -> int:
    """Least m such that for all m' >= m, blocks of size ``ell`` give
    surjectivity on pi_k and injectivity on pi_{k-1}: ceil(k / 2ell) + 1."""
    if k < 0 or ell < 1:
        raise ValueError("bott_stable_bound needs k >= 0 and ell >= 1")
    return ceil_div(k, 2 * ell) + 1


def _min_block(blocks: Iterable[int]) -> int:
    blocks = list(blocks)
    if not blocks or any(b < 1 for b in blocks):
        raise ValueError("block sizes must be a nonempty list of positive integers")
    return min(blocks)


def fd_inj(blocks: Iterable[int], degree: int) -> RankInterval:
    """inj_degree of a finite-dimensional algebra."""
    d = _min_block(blocks)
    if degree == 0:
        # GL_n of a finite-dimensional algebra is connected
        return RankInterval.exact(1)
    return RankInterval.at_most(bott_stable_bound(degree + 1, d))


def fd_surj(blocks: Iterable[int], degree: int) -> RankInterval:
    """surj_degree of a finite-dimensional algebra."""
    d = _min_block(blocks)
    if degree == 0:
        return RankInterval.exact(1)
    return RankInterval.at_most(bott_stable_bound(degree, d))


def fd_inj_space(blocks: Iterable[int], dim: int) -> RankInterval:
    """inj_X of a finite-dimensional algebra for a non-contractible X with
    dim X <= dim: the inclusion is (dim + 1)-connected from this threshold."""
    d = _min_block(blocks)
    return RankInterval.at_most(bott_stable_bound(dim + 1, d))


def slots_finite_dimensional(blocks: Iterable[int], k: int) -> tuple[RankInterval, RankInterval]:
    """The pair (inj_{k-1}, surj_k) for a finite-dimensional algebra with the
    given matrix block sizes.  For k = 0 both entries describe pi_0."""
    blocks = list(blocks)
    if k == 0:
        return fd_inj(blocks, 0), fd_surj(blocks, 0)
    return fd_inj(blocks, k - 1), fd_surj(blocks, k)


def slots_class_F(k: int) -> tuple[RankInterval, RankInterval]:
    """(inj_k, surj_k) for an algebra whose block inclusions are weak
    homotopy equivalences from m = 2 on."""
    if k < 0:
        raise ValueError("degree must be >= 0")
    return RankInterval.exact(1), RankInterval.at_most(2)


@dataclass(frozen=True)
class SlotBound:
    slot: str
    hi: ExtNat
    source: str


def slots_from_ranks(csr_self: RankInterval, gsr_tensor_circle: RankInterval,
                     csr_tensor_circle: RankInterval) -> list[SlotBound]:
    """Upper bounds on slots of D from csr(D), gsr(TD) and csr(TD)."""
    out = []
    if csr_self.hi != INF:
        out.append(SlotBound("surj_0", csr_self.hi, "csr"))
    if gsr_tensor_circle.hi != INF:
        out.append(SlotBound("inj_0", gsr_tensor_circle.hi, "gsr_T"))
    if csr_tensor_circle.hi != INF:
        out.append(SlotBound("inj_0", csr_tensor_circle.hi, "csr_T"))
        out.append(SlotBound("surj_1", csr_tensor_circle.hi, "csr_T"))
    return out


def slots_sphere_tensor(a_slots: Mapping[str, RankInterval], n: int) -> ExtNat:
    """Common upper bound on inj_0 and surj_1 of C(S^{n-1}) (x) A, given the
    slots of A (missing entries are unknown)."""
    if n < 1:
        raise ValueError("sphere tensor needs n >= 1")
    keys = ("surj_1", f"surj_{n}", f"inj_{n - 1}")
    return max(a_slots.get(key, RankInterval()).hi for key in keys)
