"""State-merging widening parametric in a length bound ``n``."""

from __future__ import annotations

from .core import Automaton, determinize_minimize, lub, quotient
from .symbols import sym_key


def local_languages(a: Automaton, n: int) -> list:
    """Per state, the symbol strings of length at most ``n`` readable from it.

    ⊤ is an ordinary letter here.  Strings are keyed through ``sym_key`` so
    they hash and compare uniformly.
    """
    memo: dict = {}

    def lang(q, k):
        key = (q, k)
        got = memo.get(key)
        if got is not None:
            return got
        out = {()}
        if k > 0:
            for sym, d in a.out(q):
                head = (sym_key(sym),)
                for w in lang(d, k - 1):
                    out.add(head + w)
        res = frozenset(out)
        memo[key] = res
        return res

    return [lang(q, n) for q in range(a.n)]


def merge_by_local_language(a: Automaton, n: int) -> Automaton:
    a = determinize_minimize(a)
    langs = local_languages(a, n)
    ids: dict = {}
    cls = [ids.setdefault(lg, len(ids)) for lg in langs]
    if len(ids) == a.n:
        return a
    return quotient(a, cls)


def widen(a: Automaton, b: Automaton, n: int) -> Automaton:
    """Merge states of ``a ⊔ b`` that share their readable language up to ``n``."""
    if n < 1:
        raise ValueError("widening parameter must be positive")
    return merge_by_local_language(lub(a, b), n)
