"""The Tarsis string domain: automata over string symbols and their
abstract string operations."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .automata import core as fa
from .automata.symbols import TOP
from .automata.widening import widen as _widen
from .errors import BottomInput
from .regex import _rsubs, completed_to_automaton, to_regex, to_string
from .values.booleans import BOTH, FALSE, TRUE, BoolSet
from .values.intervals import INF, Interval

SUBSTRING_PAIR_LIMIT = 10_000


def _require(*autos):
    for a in autos:
        if not fa.determinize_minimize(a).finals:
            raise BottomInput("bottom string value")


def _segments(symbols) -> list:
    """Concrete runs of a symbol string, split at each ⊤."""
    segs = [""]
    for s in symbols:
        if s is TOP:
            segs.append("")
        else:
            segs[-1] += s
    return segs


# ------------------------------------------------------------ operations


def abs_concat(x: fa.Automaton, y: fa.Automaton) -> fa.Automaton:
    return fa.concat(x, y)


def abs_length(x: fa.Automaton) -> Interval:
    _require(x)
    lo, hi = fa.length_bounds(x)
    return Interval(lo, hi)


def abs_contains(x: fa.Automaton, y: fa.Automaton) -> BoolSet:
    _require(x, y)
    if fa.intersect_empty(y, fa.factor_automaton(x)):
        return FALSE
    single, sigma = fa.is_single_path(y)
    if not single:
        return BOTH
    if not fa.has_cycle(x):
        if all(any(sigma in seg for seg in _segments(p)) for p in fa.symbol_strings(x)):
            return TRUE
    # every concrete string of x has sigma as a factor
    pattern = fa.concat(fa.top(), fa.literal(sigma), fa.top())
    if fa.leq(x, pattern):
        return TRUE
    return BOTH


def _first_index(symbols, sigma: str) -> Interval:
    """Possible first-occurrence indices of ``sigma`` along one path."""
    if TOP not in symbols:
        return Interval.of("".join(symbols).find(sigma))
    if sigma == "":
        return Interval.of(0)
    segs = _segments(symbols)
    # lowest index: all ⊤ empty, or sigma starting right before the first ⊤
    squeezed = "".join(segs).find(sigma)
    cands = [max(0, len(segs[0]) - len(sigma) + 1)]
    if squeezed >= 0:
        cands.append(squeezed)
    lo = min(cands)
    definite = any(sigma in seg for seg in segs)
    if not definite:
        return Interval(-1, INF)
    head = segs[0].find(sigma)
    if head >= 0:
        return Interval(lo, head)
    return Interval(lo, INF)


def _io(x: fa.Automaton, sigma: str) -> Interval:
    out = Interval.bottom()
    for p in fa.symbol_strings(x):
        out = out.lub(_first_index(p, sigma))
    return out


def abs_index_of(x: fa.Automaton, y: fa.Automaton) -> Interval:
    _require(x, y)
    if fa.has_cycle(x) or fa.has_cycle(y) or fa.reads_top(y):
        return Interval(-1, INF)
    if fa.intersect_empty(y, fa.factor_automaton(x)):
        return Interval.of(-1)
    out = Interval.bottom()
    for sigma in sorted(fa.strings(y)):
        out = out.lub(_io(x, sigma))
    return out


def _occurrences(text: str, sigma: str) -> list:
    """Leftmost non-overlapping occurrences, as concrete replace finds them."""
    hits = []
    pos = text.find(sigma)
    while pos >= 0:
        hits.append((pos, pos + len(sigma)))
        pos = text.find(sigma, pos + len(sigma))
    return hits


def _rebuild_path(symbols, hits, repl_for) -> fa.Automaton:
    """Rebuild one path with each hit ``(start, end)`` swapped for
    ``repl_for(piece)``, where ``piece`` is the original stretch.

    Hits must be sorted and disjoint.  Unmatched stretches keep their
    original symbol boundaries.
    """
    if not hits:
        return fa.from_symbol_strings([tuple(symbols)])
    cuts = [0]
    for s in symbols:
        cuts.append(cuts[-1] + len(s))

    def piece(a, b):
        out = []
        for k, s in enumerate(symbols):
            lo, hi = max(a, cuts[k]), min(b, cuts[k + 1])
            if lo < hi:
                out.append(s[lo - cuts[k]:hi - cuts[k]])
        return fa.from_symbol_strings([tuple(out)])

    parts = []
    prev = 0
    for a, b in hits:
        parts.append(piece(prev, a))
        parts.append(repl_for(piece(a, b)))
        prev = b
    parts.append(piece(prev, cuts[-1]))
    return fa.concat(*parts)


def _acyclic_paths(a: fa.Automaton) -> list:
    a = fa.determinize_minimize(a)
    if fa.has_cycle(a):
        from .errors import CyclicAutomaton

        raise CyclicAutomaton("replace needs an acyclic automaton")
    return fa.symbol_strings(a)


def make_replace(a: fa.Automaton, sigma: str, repl: fa.Automaton) -> fa.Automaton:
    """Must-replace of ``sigma`` by ``repl`` on each path of an acyclic,
    ⊤-free automaton.  Paths are rebuilt separately so shared suffixes of
    different paths are never pruned."""
    if sigma == "":
        raise ValueError("empty search string")
    return fa.lub(*(
        _rebuild_path(p, _occurrences("".join(p), sigma), lambda _: repl)
        for p in _acyclic_paths(a)
    ))


def may_replace(a: fa.Automaton, words, repl: fa.Automaton) -> fa.Automaton:
    """Replacement when the search string is one of several ``words``.

    On each path every occurrence of every word may or may not be
    replaced.  When occurrences of different words overlap on a path, that
    path falls back to the join over words of one-word replacements with
    ``repl ⊔ word``.
    """
    words = sorted(set(words))
    if "" in words:
        raise ValueError("empty search string")
    out = []
    for p in _acyclic_paths(a):
        text = "".join(p)
        hits = sorted(h for w in words for h in _occurrences(text, w))
        if all(x[1] <= y[0] for x, y in zip(hits, hits[1:])):
            out.append(_rebuild_path(p, hits, lambda orig: fa.lub(repl, orig)))
        else:
            out.extend(
                _rebuild_path(p, _occurrences(text, w), lambda _, w=w: fa.lub(repl, fa.literal(w)))
                for w in words
            )
    return fa.lub(*out)


def abs_replace(x: fa.Automaton, search: fa.Automaton, repl: fa.Automaton) -> fa.Automaton:
    _require(x, search, repl)
    if fa.has_cycle(x) or fa.has_cycle(search) or fa.reads_top(search):
        return fa.top()
    if fa.intersect_empty(search, fa.factor_automaton(x)):
        return fa.determinize_minimize(x)
    if fa.reads_top(x) or fa.member(search, ""):
        return fa.top()
    words = sorted(fa.strings(search))
    if len(words) == 1:
        return make_replace(x, words[0], repl)
    return may_replace(x, words, repl)


def _clip(iv: Interval, cap: float) -> Interval:
    return Interval(max(iv.lo, 0), min(iv.hi, cap))


def abs_substring(x: fa.Automaton, start: Interval, end: Interval) -> fa.Automaton:
    _require(x)
    if start.is_bottom() or end.is_bottom():
        raise BottomInput("bottom substring bound")
    _, maxlen = fa.length_bounds(x)
    start = _clip(start, maxlen)
    end = _clip(end, maxlen)
    if start.is_bottom() or end.is_bottom() or start.lo > end.hi:
        return fa.empty()
    if math.isinf(start.hi) or math.isinf(end.hi):
        return fa.factor_automaton(x)
    pairs = [(a, b) for a in start for b in end if a <= b]
    if len(pairs) > SUBSTRING_PAIR_LIMIT:
        return fa.factor_automaton(x)
    r = to_regex(x)
    memo: dict = {}
    texts = set()
    for a, b in pairs:
        if a == b:
            texts.add(("", 0, 0))
        else:
            texts.update(_rsubs(r, a, b - a, memo))
    return completed_to_automaton(texts)


def abs_widen(x: fa.Automaton, y: fa.Automaton, n: int, tau: int) -> fa.Automaton:
    u = fa.lub(x, y)
    if u.n > tau:
        return _widen(x, y, n)
    return u


# ---------------------------------------------------------------- lattice


@dataclass(frozen=True)
class StringAbs:
    """Tarsis abstract value; ``auto`` is always canonical."""

    auto: fa.Automaton

    def __post_init__(self):
        object.__setattr__(self, "auto", fa.determinize_minimize(self.auto))

    @staticmethod
    def top() -> "StringAbs":
        return StringAbs(fa.top())

    @staticmethod
    def bottom() -> "StringAbs":
        return StringAbs(fa.empty())

    @staticmethod
    def literal(s: str) -> "StringAbs":
        return StringAbs(fa.literal(s))

    def is_bottom(self) -> bool:
        return not self.auto.finals

    def leq(self, other: "StringAbs") -> bool:
        return fa.leq(self.auto, other.auto)

    def lub(self, other: "StringAbs") -> "StringAbs":
        return StringAbs(fa.lub(self.auto, other.auto))

    def widen(self, other: "StringAbs", n: int = 2, tau: int = 5) -> "StringAbs":
        return StringAbs(abs_widen(self.auto, other.auto, n, tau))

    def concat(self, other: "StringAbs") -> "StringAbs":
        return StringAbs(abs_concat(self.auto, other.auto))

    def length(self) -> Interval:
        return abs_length(self.auto)

    def contains(self, other: "StringAbs") -> BoolSet:
        return abs_contains(self.auto, other.auto)

    def index_of(self, other: "StringAbs") -> Interval:
        return abs_index_of(self.auto, other.auto)

    def replace(self, search: "StringAbs", repl: "StringAbs") -> "StringAbs":
        return StringAbs(abs_replace(self.auto, search.auto, repl.auto))

    def substring(self, start: Interval, end: Interval) -> "StringAbs":
        return StringAbs(abs_substring(self.auto, start, end))

    def member(self, s: str) -> bool:
        return fa.member(self.auto, s)

    def __str__(self):
        if self.is_bottom():
            return "⊥"
        return to_string(to_regex(self.auto))
