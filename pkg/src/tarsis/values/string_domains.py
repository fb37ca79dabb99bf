"""Uniform interface over the string domains used by the analyzer.

Every domain exposes ``literal``, ``unknown``, ``top``, ``bottom``, the
lattice operations and the abstract string operations, plus ``member`` for
soundness checks and ``show``/``to_json`` for reports.
"""

from __future__ import annotations

import string

from .. import domain as td
from ..automata import core as fa
from ..automata.symbols import FRESH, TOP
from ..regex import to_regex, to_string
from .booleans import BOTH, FALSE, TRUE
from .baselines import CharInclusionDomain, PrefixDomain, SuffixDomain


def _single_string(a):
    """The only concrete string of ``a``, or None."""
    a = fa.determinize_minimize(a)
    if len(a.finals) != 1 or fa.has_cycle(a) or fa.reads_top(a):
        return None
    words = fa.strings(a)
    return next(iter(words)) if len(words) == 1 else None


class TarsisDomain:
    name = "tarsis"

    def __init__(self, widening_n: int = 2, tau: int = 5):
        self.n = widening_n
        self.tau = tau

    def literal(self, s):
        return fa.literal(s)

    def unknown(self):
        return fa.top()

    top = unknown

    def bottom(self):
        return fa.empty()

    def is_bottom(self, v):
        return not fa.determinize_minimize(v).finals

    def lub(self, a, b):
        return fa.lub(a, b)

    def leq(self, a, b):
        return fa.leq(a, b)

    def stable(self, a, b):
        """Symbol-level inclusion, used to detect loop-head fixpoints."""
        b = fa.determinize_minimize(b)
        return fa.lub(a, b) == b

    def widen(self, a, b):
        return td.abs_widen(a, b, self.n, self.tau)

    def widen_untimed(self, a, b):
        """Widening without the state threshold."""
        return td._widen(a, b, self.n)

    def concat(self, a, b):
        return td.abs_concat(a, b)

    def length(self, v):
        return td.abs_length(v)

    def contains(self, a, b):
        return td.abs_contains(a, b)

    def index_of(self, a, b):
        return td.abs_index_of(a, b)

    def replace(self, a, s, r):
        return td.abs_replace(a, s, r)

    def substring(self, v, i, j):
        return td.abs_substring(v, i, j)

    def equals(self, a, b):
        if fa.intersect_empty(a, b):
            return FALSE
        sa, sb = _single_string(a), _single_string(b)
        if sa is not None and sa == sb:
            return TRUE
        return BOTH

    def member(self, v, s):
        return fa.member(v, s)

    def show(self, v):
        if self.is_bottom(v):
            return "⊥"
        return to_string(to_regex(v))

    def to_json(self, v):
        return self.show(v)


class CharFADomain(TarsisDomain):
    """Classic character automata: one character per transition, no ⊤.

    Unknown strings are a loop over every character of ``charset``, the
    program characters and FRESH (which stands for all remaining ones).
    Operations reuse the Tarsis algorithms and re-expand their results to
    single characters afterwards.
    """

    name = "charfa"

    def __init__(self, alphabet=frozenset(), widening_n: int = 2, tau: int = 5,
                 charset: str = string.printable):
        super().__init__(widening_n, tau)
        self.alphabet = tuple(sorted(set(alphabet) | set(charset) | {FRESH}))

    def _expand(self, a):
        return fa.determinize_minimize(fa.flatten(fa.determinize_minimize(a), self.alphabet))

    def literal(self, s):
        return fa.from_strings([s])

    def unknown(self):
        return self._expand(fa.top())

    top = unknown

    def widen(self, a, b):
        return self._expand(td.abs_widen(a, b, self.n, self.tau))

    def widen_untimed(self, a, b):
        return self._expand(td._widen(a, b, self.n))

    def concat(self, a, b):
        return self._expand(td.abs_concat(a, b))

    def replace(self, a, s, r):
        return self._expand(td.abs_replace(a, s, r))

    def substring(self, v, i, j):
        return self._expand(td.abs_substring(v, i, j))

    def _fold_any(self, a, max_edges: int = 400):
        """A smaller ⊤-automaton with the same language, for display.

        Wide character classes become ⊤ edges when that adds nothing to the
        language, then edges whose removal loses nothing are dropped.
        """
        full = set(self.alphabet)
        groups: dict = {}
        for s, sym, d in a.transitions:
            groups.setdefault((s, d), set()).add(sym)
        trans = set(a.transitions)
        for (s, d), syms in sorted(groups.items()):
            if 2 * len(syms) < len(full):
                continue
            cand = {t for t in trans if not (t[0] == s and t[2] == d)} | {(s, TOP, d)}
            if fa.leq(fa.Automaton(a.n, a.initial, a.finals, cand), a):
                trans = cand
        if len(trans) <= max_edges:
            for t in sorted(trans, key=lambda t: (t[1] is TOP, t[0], t[2])):
                cand = trans - {t}
                if fa.leq(a, fa.Automaton(a.n, a.initial, a.finals, cand)):
                    trans = cand
        return fa.Automaton(a.n, a.initial, a.finals, trans)

    def show(self, v):
        if self.is_bottom(v):
            return "⊥"
        return to_string(to_regex(self._fold_any(fa.determinize_minimize(v))))


DOMAINS = ("tarsis", "charfa", "prefix", "suffix", "charinclusion")


def make_domain(name: str, alphabet=frozenset(), widening_n: int = 2, tau: int = 5):
    if name == "tarsis":
        return TarsisDomain(widening_n, tau)
    if name == "charfa":
        return CharFADomain(alphabet, widening_n, tau)
    if name == "prefix":
        return PrefixDomain()
    if name == "suffix":
        return SuffixDomain()
    if name == "charinclusion":
        return CharInclusionDomain()
    raise ValueError(f"unknown string domain: {name}")
