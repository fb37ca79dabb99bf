"""Automata over string symbols with the unknown-string marker.

States are the integers ``0..n-1``.  Transitions are ``(src, label, dst)``
triples where ``label`` is a non-empty ``str``, :data:`TOP` or :data:`EPS`.
Operations that return canonical automata (minimal DFA, BFS-numbered in
symbol order) make structural equality coincide with equality of the
symbol-level language.
"""

from __future__ import annotations

import heapq
from array import array
from functools import lru_cache
from typing import Iterable

from ..errors import CyclicAutomaton, EmptyLanguage
from . import _backend
from .symbols import EPS, FRESH, TOP, sym_key


class Automaton:
    __slots__ = ("n", "initial", "finals", "transitions", "canonical", "_hash", "_out", "_chars")

    def __init__(self, n, initial, finals, transitions, canonical=False):
        self.n = n
        self.initial = initial
        self.finals = frozenset(finals)
        if canonical:
            # built in sorted order by the canonical constructors
            self.transitions = tuple(transitions)
        else:
            self.transitions = tuple(
                sorted(set(transitions), key=lambda t: (t[0], sym_key(t[1]), t[2]))
            )
        self.canonical = canonical
        self._hash = None
        self._out = None
        self._chars = None

    def __eq__(self, other):
        if not isinstance(other, Automaton):
            return NotImplemented
        return (
            self.n == other.n
            and self.initial == other.initial
            and self.finals == other.finals
            and self.transitions == other.transitions
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.initial, self.finals, self.transitions))
        return self._hash

    def __repr__(self):
        from .serialize import to_text

        return f"Automaton({to_text(self)})"

    @property
    def states(self) -> range:
        return range(self.n)

    def out(self, q) -> tuple:
        """Outgoing ``(label, dst)`` pairs of state ``q``."""
        if self._out is None:
            table = [[] for _ in range(self.n)]
            for s, sym, d in self.transitions:
                table[s].append((sym, d))
            self._out = tuple(tuple(x) for x in table)
        return self._out[q]

    def symbols(self) -> set:
        return {sym for _, sym, _ in self.transitions if sym is not EPS}

    def is_empty(self) -> bool:
        return not determinize_minimize(self).finals


# ---------------------------------------------------------------- builders


def empty() -> Automaton:
    return Automaton(1, 0, (), (), canonical=True)


def epsilon() -> Automaton:
    return Automaton(1, 0, (0,), (), canonical=True)


def top() -> Automaton:
    """The automaton reading a single ⊤; its concretization is every string."""
    return Automaton(2, 0, (1,), ((0, TOP, 1),), canonical=True)


def literal(s: str) -> Automaton:
    """One transition carrying the whole string."""
    if s == "":
        return epsilon()
    return Automaton(2, 0, (1,), ((0, s, 1),), canonical=True)


def from_symbol_strings(seqs: Iterable[Iterable]) -> Automaton:
    """Canonical automaton accepting the given sequences of symbols."""
    trans = []
    finals = []
    children: dict = {}
    n = 1
    for seq in seqs:
        q = 0
        for sym in seq:
            key = (q, sym)
            nxt = children.get(key)
            if nxt is None:
                nxt = n
                n += 1
                children[key] = nxt
                trans.append((q, sym, nxt))
            q = nxt
        finals.append(q)
    return determinize_minimize(Automaton(n, 0, finals, trans))


def from_strings(strings: Iterable[str]) -> Automaton:
    """Canonical automaton accepting the strings, one character per symbol."""
    return from_symbol_strings(tuple(s) for s in strings)


def _disjoint(parts):
    """Renumber automata into one state space.  Returns (offsets, n, trans)."""
    offsets = []
    trans = []
    n = 0
    for a in parts:
        offsets.append(n)
        trans.extend((s + n, sym, d + n) for s, sym, d in a.transitions)
        n += a.n
    return offsets, n, trans


def lub(*autos: Automaton) -> Automaton:
    autos = [a for a in autos if a.finals]
    if not autos:
        return empty()
    if len(autos) == 1:
        return determinize_minimize(autos[0])
    if len(autos) == 2 and autos[0] == autos[1] and autos[0].canonical:
        return autos[0]
    offsets, n, trans = _disjoint(autos)
    init = n
    finals = []
    for off, a in zip(offsets, autos):
        trans.append((init, EPS, a.initial + off))
        finals.extend(f + off for f in a.finals)
    return determinize_minimize(Automaton(n + 1, init, finals, trans))


def concat(*autos: Automaton) -> Automaton:
    if not autos:
        return epsilon()
    if any(not a.finals for a in autos):
        return empty()
    offsets, n, trans = _disjoint(autos)
    for i in range(len(autos) - 1):
        nxt = autos[i + 1].initial + offsets[i + 1]
        trans.extend((f + offsets[i], EPS, nxt) for f in autos[i].finals)
    last = autos[-1]
    finals = [f + offsets[-1] for f in last.finals]
    return determinize_minimize(Automaton(n, autos[0].initial, finals, trans))


def star(a: Automaton) -> Automaton:
    init = a.n
    trans = list(a.transitions)
    trans.append((init, EPS, a.initial))
    trans.extend((f, EPS, init) for f in a.finals)
    return determinize_minimize(Automaton(a.n + 1, init, (init,), trans))


# ------------------------------------------------------- canonicalization


@lru_cache(maxsize=8192)
def _det_min_cached(a: Automaton) -> Automaton:
    syms = sorted({sym for _, sym, _ in a.transitions if sym is not EPS}, key=sym_key)
    sidx = {sym: i for i, sym in enumerate(syms)}
    edges = array("i")
    for s, sym, d in a.transitions:
        edges.extend((s, -1 if sym is EPS else sidx[sym], d))
    final = array("i", [0]) * a.n
    for f in a.finals:
        final[f] = 1
    m, finals, trans = _backend.det_min(a.n, len(syms), a.initial, final, edges)
    if m == 0:
        return empty()
    out = [(trans[i], syms[trans[i + 1]], trans[i + 2]) for i in range(0, len(trans), 3)]
    return Automaton(m, 0, finals, out, canonical=True)


def determinize_minimize(a: Automaton) -> Automaton:
    """Unique minimal DFA for the symbol-level language of ``a``."""
    if a.canonical:
        return a
    return _det_min_cached(a)


minimize = determinize_minimize


def quotient(a: Automaton, cls) -> Automaton:
    """Merge states with equal class id; result is canonicalized."""
    ids = {}
    for c in cls:
        ids.setdefault(c, len(ids))
    trans = [(ids[cls[s]], sym, ids[cls[d]]) for s, sym, d in a.transitions]
    finals = [ids[cls[f]] for f in a.finals]
    return determinize_minimize(Automaton(len(ids), ids[cls[a.initial]], finals, trans))


# --------------------------------------------------- flattened semantics


def _own_chars(a: Automaton) -> frozenset:
    if a._chars is None:
        out = set()
        for _, sym, _ in a.transitions:
            if isinstance(sym, str):
                out.update(sym)
        out.discard(FRESH)
        a._chars = frozenset(out)
    return a._chars


def chars(*autos: Automaton) -> frozenset:
    if len(autos) == 1:
        return _own_chars(autos[0])
    return frozenset().union(*(_own_chars(a) for a in autos))


def flatten(a: Automaton, alphabet: Iterable[str] | None = None) -> Automaton:
    """Character-level automaton; ⊤ becomes a loop over the alphabet plus FRESH."""
    alpha = sorted(set(chars(a) if alphabet is None else alphabet) | {FRESH})
    n = a.n
    trans = []
    for s, sym, d in a.transitions:
        if sym is EPS:
            trans.append((s, EPS, d))
        elif sym is TOP:
            m = n
            n += 1
            trans.append((s, EPS, m))
            trans.extend((m, c, m) for c in alpha)
            trans.append((m, EPS, d))
        else:
            prev = s
            for c in sym[:-1]:
                trans.append((prev, c, n))
                prev = n
                n += 1
            trans.append((prev, sym[-1], d))
    return Automaton(n, a.initial, a.finals, trans)


class CharDFA:
    """Dense table form of a canonical character-level DFA."""

    __slots__ = ("alphabet", "index", "k", "n", "delta", "final", "initial")

    def __init__(self, dfa: Automaton, alphabet: tuple):
        self.alphabet = alphabet
        self.index = {c: i for i, c in enumerate(alphabet)}
        self.k = k = len(alphabet)
        self.n = dfa.n
        self.initial = dfa.initial
        self.delta = array("i", [-1]) * (dfa.n * k)
        self.final = array("i", [0]) * dfa.n
        for f in dfa.finals:
            self.final[f] = 1
        for s, c, d in dfa.transitions:
            self.delta[s * k + self.index[c]] = d

    def accepts_codes(self, codes) -> bool:
        q = self.initial
        k = self.k
        for a in codes:
            q = self.delta[q * k + a]
            if q < 0:
                return False
        return bool(self.final[q])


@lru_cache(maxsize=8192)
def char_dfa(a: Automaton, alphabet: frozenset) -> CharDFA:
    alpha = tuple(sorted(alphabet | {FRESH}))
    dfa = determinize_minimize(flatten(determinize_minimize(a), alpha))
    return CharDFA(dfa, alpha)


def member(a: Automaton, s: str) -> bool:
    """``s`` belongs to the concretization of ``a``."""
    alpha = chars(a)
    d = char_dfa(a, alpha)
    idx = d.index
    fresh = idx[FRESH]
    return d.accepts_codes(idx.get(c, fresh) for c in s)


def leq(a: Automaton, b: Automaton) -> bool:
    """Concretization inclusion."""
    if a == b:
        return True
    if not a.finals or not determinize_minimize(a).finals:
        return True
    alpha = chars(a, b)
    da = char_dfa(a, alpha)
    db = char_dfa(b, alpha)
    return not _backend.product_search(
        _backend.INCLUSION, da.k, da.delta, da.final, da.initial,
        db.delta, db.final, db.initial,
    )


def equivalent(a: Automaton, b: Automaton) -> bool:
    return leq(a, b) and leq(b, a)


def intersect_empty(a: Automaton, b: Automaton) -> bool:
    alpha = chars(a, b)
    da = char_dfa(a, alpha)
    db = char_dfa(b, alpha)
    if not da.final.count(1) or not db.final.count(1):
        return True
    return not _backend.product_search(
        _backend.INTERSECTION, da.k, da.delta, da.final, da.initial,
        db.delta, db.final, db.initial,
    )


# --------------------------------------------------------- path queries


def _cycle_in(a: Automaton) -> bool:
    color = [0] * a.n
    for root in range(a.n):
        if color[root]:
            continue
        stack = [(root, iter(a.out(root)))]
        color[root] = 1
        while stack:
            q, it = stack[-1]
            for _, d in it:
                if color[d] == 1:
                    return True
                if color[d] == 0:
                    color[d] = 1
                    stack.append((d, iter(a.out(d))))
                    break
            else:
                color[q] = 2
                stack.pop()
    return False


def has_cycle(a: Automaton) -> bool:
    return _cycle_in(determinize_minimize(a))


def reads_top(a: Automaton) -> bool:
    return any(sym is TOP for _, sym, _ in determinize_minimize(a).transitions)


def enumerate_paths(a: Automaton) -> list:
    """Accepting transition sequences of the canonical form of ``a``."""
    a = determinize_minimize(a)
    if _cycle_in(a):
        raise CyclicAutomaton("automaton has a cycle")
    if not a.finals:
        return []
    paths = []

    def walk(q, acc):
        if q in a.finals:
            paths.append(tuple(acc))
        for sym, d in a.out(q):
            acc.append((q, sym, d))
            walk(d, acc)
            acc.pop()

    walk(a.initial, [])
    return paths


def symbol_strings(a: Automaton) -> list:
    """Label sequences of all accepting paths."""
    return [tuple(t[1] for t in p) for p in enumerate_paths(a)]


def strings(a: Automaton) -> set:
    """Finite language as Python strings.  Requires acyclic and ⊤-free."""
    out = set()
    for seq in symbol_strings(a):
        if any(s is TOP for s in seq):
            raise ValueError("language contains ⊤")
        out.add("".join(seq))
    return out


def length_bounds(a: Automaton):
    """Minimum and maximum length of concrete strings, ⊤ weighing zero."""
    a = determinize_minimize(a)
    if not a.finals:
        raise EmptyLanguage("empty language has no length")
    dist = {a.initial: 0}
    heap = [(0, a.initial)]
    lo = None
    while heap:
        d, q = heapq.heappop(heap)
        if d > dist.get(q, d):
            continue
        if q in a.finals:
            lo = d
            break
        for sym, t in a.out(q):
            nd = d + (len(sym) if isinstance(sym, str) else 0)
            if nd < dist.get(t, nd + 1):
                dist[t] = nd
                heapq.heappush(heap, (nd, t))
    if _cycle_in(a) or any(s is TOP for _, s, _ in a.transitions):
        return lo, float("inf")
    memo: dict = {}

    def longest(q):
        if q in memo:
            return memo[q]
        best = 0 if q in a.finals else -1
        for sym, t in a.out(q):
            sub = longest(t)
            if sub >= 0:
                best = max(best, sub + len(sym))
        memo[q] = best
        return best

    order = _topo_order(a)
    for q in reversed(order):
        longest(q)
    return lo, longest(a.initial)


def _topo_order(a: Automaton) -> list:
    indeg = [0] * a.n
    for _, _, d in a.transitions:
        indeg[d] += 1
    ready = [q for q in range(a.n) if indeg[q] == 0]
    order = []
    while ready:
        q = ready.pop()
        order.append(q)
        for _, d in a.out(q):
            indeg[d] -= 1
            if indeg[d] == 0:
                ready.append(d)
    return order


def split_chars(a: Automaton) -> Automaton:
    """Split every string label into single-character transitions."""
    n = a.n
    trans = []
    for s, sym, d in a.transitions:
        if isinstance(sym, str) and len(sym) > 1:
            prev = s
            for c in sym[:-1]:
                trans.append((prev, c, n))
                prev = n
                n += 1
            trans.append((prev, sym[-1], d))
        else:
            trans.append((s, sym, d))
    return Automaton(n, a.initial, a.finals, trans)


def factor_automaton(a: Automaton) -> Automaton:
    """Automaton for every contiguous substring of the concretization."""
    a = determinize_minimize(a)
    if not a.finals:
        return empty()
    sp = split_chars(a)
    init = sp.n
    trans = list(sp.transitions)
    trans.extend((init, EPS, q) for q in range(sp.n))
    return determinize_minimize(Automaton(sp.n + 1, init, range(sp.n + 1), trans))


def is_single_path(a: Automaton):
    """``(True, longest)`` when every string is a prefix of the longest one."""
    a = determinize_minimize(a)
    if not a.finals or _cycle_in(a):
        return False, None
    if any(s is TOP for _, s, _ in a.transitions):
        return False, None
    words = strings(a)
    longest = max(words, key=len)
    if all(longest.startswith(w) for w in words):
        return True, longest
    return False, None
