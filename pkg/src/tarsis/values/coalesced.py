"""Coalesced sum of a string domain, intervals and boolean sets.

Component bottoms collapse into the single :data:`BOTTOM`; values from
different components join to :data:`TOP_VALUE`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .booleans import BoolSet
from .intervals import Interval

BOT, STR, INT, BOOL, TOPK = "bottom", "string", "int", "bool", "top"


@dataclass(frozen=True)
class AbstractValue:
    kind: str
    val: object = None

    def is_bottom(self) -> bool:
        return self.kind == BOT


BOTTOM = AbstractValue(BOT)
TOP_VALUE = AbstractValue(TOPK)


class Values:
    """Lattice operations on :class:`AbstractValue` for one string domain."""

    def __init__(self, strings):
        self.strings = strings

    def of_str(self, v) -> AbstractValue:
        return BOTTOM if self.strings.is_bottom(v) else AbstractValue(STR, v)

    @staticmethod
    def of_int(iv: Interval) -> AbstractValue:
        return BOTTOM if iv.is_bottom() else AbstractValue(INT, iv)

    @staticmethod
    def of_bool(bs: BoolSet) -> AbstractValue:
        return BOTTOM if bs.is_bottom() else AbstractValue(BOOL, bs)

    def _join(self, a, b, op_str, op_int, op_bool):
        if a.kind == BOT:
            return b
        if b.kind == BOT:
            return a
        if a.kind != b.kind or a.kind == TOPK:
            return TOP_VALUE
        if a.kind == STR:
            return self.of_str(op_str(a.val, b.val))
        if a.kind == INT:
            return self.of_int(op_int(a.val, b.val))
        return self.of_bool(op_bool(a.val, b.val))

    def lub(self, a, b):
        return self._join(a, b, self.strings.lub, Interval.lub, BoolSet.lub)

    def widen(self, a, b, strings_widen=None):
        sw = strings_widen or self.strings.widen
        return self._join(a, b, sw, Interval.widen, BoolSet.lub)

    def leq(self, a, b) -> bool:
        if a.kind == BOT or b.kind == TOPK:
            return True
        if a.kind != b.kind:
            return False
        if a.kind == STR:
            return self.strings.leq(a.val, b.val)
        return a.val.leq(b.val)

    def equal(self, a, b) -> bool:
        if a == b:
            return True
        return self.leq(a, b) and self.leq(b, a)

    def show(self, v) -> str:
        if v.kind == BOT:
            return "⊥"
        if v.kind == TOPK:
            return "⊤"
        if v.kind == STR:
            return self.strings.show(v.val)
        return str(v.val)

    def to_json(self, v):
        if v.kind in (BOT, TOPK):
            return {"kind": v.kind}
        if v.kind == STR:
            return {"kind": v.kind, "value": self.strings.to_json(v.val)}
        return {"kind": v.kind, "value": v.val.to_json()}

    def contains_concrete(self, v, c) -> bool:
        """``c`` belongs to the concretization of ``v``."""
        if v.kind == TOPK:
            return True
        if v.kind == BOT:
            return False
        if isinstance(c, bool):
            return v.kind == BOOL and c in v.val
        if isinstance(c, int):
            return v.kind == INT and c in v.val
        return v.kind == STR and self.strings.member(v.val, c)
