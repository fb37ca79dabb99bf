"""Integer intervals with infinite bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .booleans import BOTH, FALSE, TRUE, BoolSet

INF = math.inf


def _mul(a, b):
    if a == 0 or b == 0:
        return 0
    return a * b


def _div(a, b):
    """Truncating division on extended integers, ``b`` nonzero."""
    if math.isinf(b):
        return 0 if not math.isinf(a) else (INF if (a > 0) == (b > 0) else -INF)
    if math.isinf(a):
        return INF if (a > 0) == (b > 0) else -INF
    q = abs(a) // abs(b)
    return q if (a >= 0) == (b > 0) else -q


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    @staticmethod
    def of(v: int) -> "Interval":
        return Interval(v, v)

    @staticmethod
    def top() -> "Interval":
        return Interval(-INF, INF)

    @staticmethod
    def bottom() -> "Interval":
        return Interval(INF, -INF)

    def is_bottom(self) -> bool:
        return self.lo > self.hi

    def is_top(self) -> bool:
        return self.lo == -INF and self.hi == INF

    def is_singleton(self) -> bool:
        return self.lo == self.hi and not math.isinf(self.lo)

    def is_finite(self) -> bool:
        return not self.is_bottom() and not math.isinf(self.lo) and not math.isinf(self.hi)

    def __contains__(self, v) -> bool:
        return self.lo <= v <= self.hi

    def __iter__(self):
        if not self.is_finite():
            raise ValueError("cannot iterate an unbounded interval")
        return iter(range(int(self.lo), int(self.hi) + 1))

    def size(self) -> float:
        if self.is_bottom():
            return 0
        return self.hi - self.lo + 1

    def leq(self, other: "Interval") -> bool:
        if self.is_bottom():
            return True
        if other.is_bottom():
            return False
        return other.lo <= self.lo and self.hi <= other.hi

    def lub(self, other: "Interval") -> "Interval":
        if self.is_bottom():
            return other
        if other.is_bottom():
            return self
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def glb(self, other: "Interval") -> "Interval":
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        return Interval(lo, hi) if lo <= hi else Interval.bottom()

    def widen(self, other: "Interval") -> "Interval":
        if self.is_bottom():
            return other
        if other.is_bottom():
            return self
        lo = self.lo if other.lo >= self.lo else -INF
        hi = self.hi if other.hi <= self.hi else INF
        return Interval(lo, hi)

    def __neg__(self):
        if self.is_bottom():
            return self
        return Interval(-self.hi, -self.lo)

    def __add__(self, other):
        if self.is_bottom() or other.is_bottom():
            return Interval.bottom()
        lo = self.lo + other.lo
        hi = self.hi + other.hi
        return Interval(lo if not math.isnan(lo) else -INF, hi if not math.isnan(hi) else INF)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.is_bottom() or other.is_bottom():
            return Interval.bottom()
        c = [_mul(a, b) for a in (self.lo, self.hi) for b in (other.lo, other.hi)]
        return Interval(min(c), max(c))

    def __truediv__(self, other):
        if self.is_bottom() or other.is_bottom():
            return Interval.bottom()
        if 0 in other:
            return Interval.top()
        c = [_div(a, b) for a in (self.lo, self.hi) for b in (other.lo, other.hi)]
        return Interval(min(c), max(c))

    def lt(self, other) -> BoolSet:
        if self.is_bottom() or other.is_bottom():
            return BoolSet.bottom()
        if self.hi < other.lo:
            return TRUE
        if self.lo >= other.hi:
            return FALSE
        return BOTH

    def eq(self, other) -> BoolSet:
        if self.is_bottom() or other.is_bottom():
            return BoolSet.bottom()
        if self.is_singleton() and other.is_singleton() and self.lo == other.lo:
            return TRUE
        if self.hi < other.lo or other.hi < self.lo:
            return FALSE
        return BOTH

    def __str__(self):
        if self.is_bottom():
            return "⊥"

        def b(v):
            if v == INF:
                return "+∞"
            if v == -INF:
                return "-∞"
            return str(int(v))

        return f"[{b(self.lo)}, {b(self.hi)}]"

    def to_json(self):
        if self.is_bottom():
            return None

        def b(v):
            if math.isinf(v):
                return "+inf" if v > 0 else "-inf"
            return int(v)

        return [b(self.lo), b(self.hi)]
