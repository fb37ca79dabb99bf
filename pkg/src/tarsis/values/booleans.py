"""Sets of booleans: the powerset lattice over {true, false}."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class BoolSet:
    values: frozenset

    @staticmethod
    def of(*vs: bool) -> "BoolSet":
        return BoolSet(frozenset(bool(v) for v in vs))

    @staticmethod
    def bottom() -> "BoolSet":
        return BoolSet(frozenset())

    @staticmethod
    def top() -> "BoolSet":
        return BoolSet(frozenset({True, False}))

    def is_bottom(self) -> bool:
        return not self.values

    def __contains__(self, v) -> bool:
        return v in self.values

    def leq(self, other: "BoolSet") -> bool:
        return self.values <= other.values

    def lub(self, other: "BoolSet") -> "BoolSet":
        return BoolSet(self.values | other.values)

    def glb(self, other: "BoolSet") -> "BoolSet":
        return BoolSet(self.values & other.values)

    widen = lub

    def negate(self) -> "BoolSet":
        return BoolSet(frozenset(not v for v in self.values))

    def and_(self, other: "BoolSet") -> "BoolSet":
        return BoolSet(frozenset(a and b for a in self.values for b in other.values))

    def or_(self, other: "BoolSet") -> "BoolSet":
        return BoolSet(frozenset(a or b for a in self.values for b in other.values))

    def __str__(self):
        if not self.values:
            return "⊥"
        return "{" + ", ".join("true" if v else "false" for v in sorted(self.values, reverse=True)) + "}"

    def to_json(self):
        return sorted(self.values, reverse=True)


TRUE = BoolSet.of(True)
FALSE = BoolSet.of(False)
BOTH = BoolSet.top()
