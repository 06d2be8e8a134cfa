"""Extended naturals, rank intervals and three-valued flags.

Ranks take values in {1, 2, ...} together with infinity.  Finite values are
plain ``int``; infinity is ``math.inf`` so that ``max``/``min`` and ordering
work without special cases.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Union

INF = math.inf

ExtNat = Union[int, float]


class InconsistencyError(Exception):
    """Two bounds on the same quantity do not overlap."""

    def __init__(self, message: str, first: object = None, second: object = None):
        super().__init__(message)
        self.first = first
        self.second = second


def is_finite(n: ExtNat) -> bool:
    return n != INF


def check_extnat(n: ExtNat, minimum: int = 1) -> ExtNat:
    if n == INF:
        return INF
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"expected int or INF, got {n!r}")
    if n < minimum:
        raise ValueError(f"expected a value >= {minimum}, got {n}")
    return n


def ceil_div(a: int, b: int) -> int:
    """Return the least integer >= a / b for a >= 0 and b >= 1."""
    if b < 1:
        raise ValueError("ceil_div: divisor must be a positive integer")
    if a < 0:
        raise ValueError("ceil_div: dividend must be non-negative")
    return -(-a // b)


def succ(n: ExtNat) -> ExtNat:
    return n + 1 if n != INF else INF


def pred_clamped(n: ExtNat) -> ExtNat:
    """n - 1, but never below 1."""
    if n == INF:
        return INF
    return max(1, n - 1)


def ext_str(n: ExtNat) -> str:
    return "inf" if n == INF else str(n)


def ext_json(n: ExtNat) -> int | str:
    return "inf" if n == INF else int(n)


def ext_from_json(value: int | str) -> ExtNat:
    if isinstance(value, str):
        if value.lower() in ("inf", "infinity"):
            return INF
        return check_extnat(int(value))
    return check_extnat(value)


@dataclass(frozen=True)
class RankInterval:
    """Sound enclosure ``[lo, hi]`` of a rank, with 1 <= lo <= hi <= INF."""

    lo: ExtNat = 1
    hi: ExtNat = INF

    def __post_init__(self):
        check_extnat(self.lo)
        check_extnat(self.hi)
        if self.lo > self.hi:
            raise ValueError(f"invalid interval [{ext_str(self.lo)}, {ext_str(self.hi)}]")

    @classmethod
    def exact(cls, n: ExtNat) -> RankInterval:
        return cls(n, n)

    @classmethod
    def at_most(cls, n: ExtNat) -> RankInterval:
        return cls(1, n)

    @classmethod
    def at_least(cls, n: ExtNat) -> RankInterval:
        return cls(n, INF)

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def is_unknown(self) -> bool:
        return self.lo == 1 and self.hi == INF

    def contains(self, n: ExtNat) -> bool:
        return self.lo <= n <= self.hi

    def within(self, other: RankInterval) -> bool:
        """True when self is at least as tight as other."""
        return self.lo >= other.lo and self.hi <= other.hi

    def to_json(self) -> dict:
        return {"lo": ext_json(self.lo), "hi": ext_json(self.hi)}

    @classmethod
    def from_json(cls, data: dict) -> RankInterval:
        return cls(ext_from_json(data["lo"]), ext_from_json(data["hi"]))

    def __str__(self) -> str:
        if self.is_exact:
            return ext_str(self.lo)
        return f"[{ext_str(self.lo)}, {ext_str(self.hi)}]"


UNKNOWN_INTERVAL = RankInterval()


def interval_meet(x: RankInterval, y: RankInterval, *, first: object = None,
                  second: object = None) -> RankInterval:
    """Intersection of two intervals.

    ``first`` and ``second`` describe where each bound came from; they are
    attached to the error when the intersection is empty.
    """
    lo = max(x.lo, y.lo)
    hi = min(x.hi, y.hi)
    if lo > hi:
        raise InconsistencyError(
            f"empty intersection of {x} and {y}", first=first, second=second
        )
    return RankInterval(lo, hi)


class TriBool(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    def refine(self, other: TriBool) -> TriBool:
        """Combine two facts; a decided value may not flip."""
        if other is TriBool.UNKNOWN or other is self:
            return self
        if self is TriBool.UNKNOWN:
            return other
        raise InconsistencyError(f"flag conflict: {self.value} vs {other.value}")

    @property
    def known(self) -> bool:
        return self is not TriBool.UNKNOWN

    @classmethod
    def of(cls, value: bool | None) -> TriBool:
        if value is None:
            return cls.UNKNOWN
        return cls.YES if value else cls.NO
