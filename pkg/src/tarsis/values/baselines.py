"""Prefix, suffix and character-inclusion string domains.

A value built directly from a string literal remembers that string
(``exact``) so ``contains`` can use a precise needle.  Every other
operation forgets it.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

from .booleans import BOTH, FALSE, TRUE, BoolSet
from .intervals import INF, Interval


def _concrete_substring(s: str, i: Interval, j: Interval):
    if not (i.is_singleton() and j.is_singleton()):
        return None
    a, b = int(i.lo), int(j.lo)
    if 0 <= a <= b <= len(s):
        return s[a:b]
    return False


# ----------------------------------------------------------------- prefix


@dataclass(frozen=True)
class PrefixVal:
    prefix: str = ""
    exact: Optional[str] = None
    bottom: bool = False


class PrefixDomain:
    name = "prefix"

    def literal(self, s):
        return PrefixVal(s, s)

    def top(self):
        return PrefixVal("")

    unknown = top

    def bottom(self):
        return PrefixVal(bottom=True)

    def is_bottom(self, v):
        return v.bottom

    def lub(self, a, b):
        if a.bottom:
            return b
        if b.bottom:
            return a
        if a.exact is not None and a.exact == b.exact:
            return a
        return PrefixVal(os.path.commonprefix([a.prefix, b.prefix]))

    widen = lub

    def leq(self, a, b):
        if a.bottom:
            return True
        if b.bottom:
            return False
        if b.exact is not None:
            return a.exact == b.exact
        return a.prefix.startswith(b.prefix)

    def equals(self, a, b):
        if a.exact is not None and b.exact is not None:
            return TRUE if a.exact == b.exact else FALSE
        return BOTH

    def member(self, v, s):
        if v.bottom:
            return False
        if v.exact is not None:
            return s == v.exact
        return s.startswith(v.prefix)

    def concat(self, a, b):
        if a.bottom or b.bottom:
            return self.bottom()
        if a.exact is None:
            return PrefixVal(a.prefix)
        return PrefixVal(a.exact + b.prefix)

    def length(self, v):
        if v.exact is not None:
            return Interval.of(len(v.exact))
        return Interval(len(v.prefix), INF)

    def contains(self, a, b):
        if b.exact is None:
            return BOTH
        if a.exact is not None:
            return TRUE if b.exact in a.exact else FALSE
        return TRUE if b.exact in a.prefix else BOTH

    def index_of(self, a, b):
        if b.exact is None:
            return Interval(-1, INF)
        if a.exact is not None:
            return Interval.of(a.exact.find(b.exact))
        k = a.prefix.find(b.exact)
        return Interval.of(k) if k >= 0 else Interval(-1, INF)

    def replace(self, a, s, r):
        if a.exact is not None and s.exact is not None and r.exact is not None:
            return PrefixVal(a.exact.replace(s.exact, r.exact))
        return self.top()

    def substring(self, v, i, j):
        if v.exact is not None and _concrete_substring(v.exact, i, j) is False:
            return self.bottom()
        if i.is_singleton() and j.is_singleton():
            a, b = int(i.lo), int(j.lo)
            if a > b or a < 0:
                return self.bottom()
            return PrefixVal(v.prefix[a:b])
        return self.top()

    def show(self, v):
        if v.bottom:
            return "⊥"
        if v.exact is not None:
            return v.exact
        return v.prefix + "⊤"

    def to_json(self, v):
        return self.show(v)


# ----------------------------------------------------------------- suffix


@dataclass(frozen=True)
class SuffixVal:
    suffix: str = ""
    exact: Optional[str] = None
    bottom: bool = False


def _common_suffix(a: str, b: str) -> str:
    return os.path.commonprefix([a[::-1], b[::-1]])[::-1]


class SuffixDomain:
    name = "suffix"

    def literal(self, s):
        return SuffixVal(s, s)

    def top(self):
        return SuffixVal("")

    unknown = top

    def bottom(self):
        return SuffixVal(bottom=True)

    def is_bottom(self, v):
        return v.bottom

    def lub(self, a, b):
        if a.bottom:
            return b
        if b.bottom:
            return a
        if a.exact is not None and a.exact == b.exact:
            return a
        return SuffixVal(_common_suffix(a.suffix, b.suffix))

    widen = lub

    def leq(self, a, b):
        if a.bottom:
            return True
        if b.bottom:
            return False
        if b.exact is not None:
            return a.exact == b.exact
        return a.suffix.endswith(b.suffix)

    def equals(self, a, b):
        if a.exact is not None and b.exact is not None:
            return TRUE if a.exact == b.exact else FALSE
        return BOTH

    def member(self, v, s):
        if v.bottom:
            return False
        if v.exact is not None:
            return s == v.exact
        return s.endswith(v.suffix)

    def concat(self, a, b):
        if a.bottom or b.bottom:
            return self.bottom()
        if b.exact is None:
            return SuffixVal(b.suffix)
        return SuffixVal(a.suffix + b.exact)

    def length(self, v):
        if v.exact is not None:
            return Interval.of(len(v.exact))
        return Interval(len(v.suffix), INF)

    def contains(self, a, b):
        if b.exact is None:
            return BOTH
        if a.exact is not None:
            return TRUE if b.exact in a.exact else FALSE
        return TRUE if b.exact in a.suffix else BOTH

    def index_of(self, a, b):
        if a.exact is not None and b.exact is not None:
            return Interval.of(a.exact.find(b.exact))
        return Interval(-1, INF)

    def replace(self, a, s, r):
        if a.exact is not None and s.exact is not None and r.exact is not None:
            return SuffixVal(a.exact.replace(s.exact, r.exact))
        return self.top()

    def substring(self, v, i, j):
        if v.exact is not None:
            got = _concrete_substring(v.exact, i, j)
            if got is False:
                return self.bottom()
            if got is not None:
                return SuffixVal(got)
        return self.top()

    def show(self, v):
        if v.bottom:
            return "⊥"
        if v.exact is not None:
            return v.exact
        return "⊤" + v.suffix

    def to_json(self, v):
        return self.show(v)


# -------------------------------------------------------- char inclusion


@dataclass(frozen=True)
class CharInclusionVal:
    certain: frozenset = frozenset()
    possible: Optional[frozenset] = None  # None: any character
    exact: Optional[str] = None
    bottom: bool = False


class CharInclusionDomain:
    name = "charinclusion"

    def literal(self, s):
        cs = frozenset(s)
        return CharInclusionVal(cs, cs, s)

    def top(self):
        return CharInclusionVal()

    unknown = top

    def bottom(self):
        return CharInclusionVal(bottom=True)

    def is_bottom(self, v):
        return v.bottom

    def lub(self, a, b):
        if a.bottom:
            return b
        if b.bottom:
            return a
        if a.exact is not None and a.exact == b.exact:
            return a
        poss = None if a.possible is None or b.possible is None else a.possible | b.possible
        return CharInclusionVal(a.certain & b.certain, poss)

    widen = lub

    def leq(self, a, b):
        if a.bottom:
            return True
        if b.bottom:
            return False
        if b.exact is not None:
            return a.exact == b.exact
        if not b.certain <= a.certain:
            return False
        if b.possible is None:
            return True
        return a.possible is not None and a.possible <= b.possible

    def equals(self, a, b):
        if a.exact is not None and b.exact is not None:
            return TRUE if a.exact == b.exact else FALSE
        return BOTH

    def member(self, v, s):
        if v.bottom:
            return False
        if v.exact is not None:
            return s == v.exact
        cs = set(s)
        return v.certain <= cs and (v.possible is None or cs <= v.possible)

    def concat(self, a, b):
        if a.bottom or b.bottom:
            return self.bottom()
        poss = None if a.possible is None or b.possible is None else a.possible | b.possible
        return CharInclusionVal(a.certain | b.certain, poss)

    def length(self, v):
        if v.exact is not None:
            return Interval.of(len(v.exact))
        if v.possible is not None and not v.possible:
            return Interval.of(0)
        return Interval(len(v.certain), INF)

    def contains(self, a, b):
        if b.exact is None:
            return BOTH
        needle = b.exact
        if a.exact is not None:
            return TRUE if needle in a.exact else FALSE
        if needle == "":
            return TRUE
        if a.possible is not None and not set(needle) <= a.possible:
            return FALSE
        if len(needle) == 1 and needle in a.certain:
            return TRUE
        return BOTH

    def index_of(self, a, b):
        if a.exact is not None and b.exact is not None:
            return Interval.of(a.exact.find(b.exact))
        if b.exact and a.possible is not None and not set(b.exact) <= a.possible:
            return Interval.of(-1)
        return Interval(-1, INF)

    def replace(self, a, s, r):
        if a.exact is not None and s.exact is not None and r.exact is not None:
            cs = frozenset(a.exact.replace(s.exact, r.exact))
            return CharInclusionVal(cs, cs)
        return self.top()

    def substring(self, v, i, j):
        if v.exact is not None and _concrete_substring(v.exact, i, j) is False:
            return self.bottom()
        return CharInclusionVal(frozenset(), v.possible)

    def show(self, v):
        if v.bottom:
            return "⊥"
        if v.exact is not None:
            return repr(v.exact)
        poss = "⊤" if v.possible is None else "".join(sorted(v.possible))
        return f"[{''.join(sorted(v.certain))}]({poss})"

    def to_json(self, v):
        return self.show(v)


__all__ = [
    "BoolSet", "CharInclusionDomain", "CharInclusionVal", "PrefixDomain",
    "PrefixVal", "SuffixDomain", "SuffixVal",
]
