"""Regular expressions over string symbols, and substring extraction.

Regexes are immutable trees.  ``to_regex`` converts an automaton by state
elimination; ``to_automaton`` goes back with a Thompson construction.
``rsubs`` computes the partial substrings of every string a regex denotes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Union

from .automata import core as fa
from .automata.symbols import EPS, TOP

# Marks one unknown character inside a partial substring.
BULLET = "\ue001"


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Epsilon:
    pass


@dataclass(frozen=True)
class Atom:
    sym: object


@dataclass(frozen=True)
class Or:
    left: "Regex"
    right: "Regex"


@dataclass(frozen=True)
class Seq:
    left: "Regex"
    right: "Regex"


@dataclass(frozen=True)
class Star:
    inner: "Regex"


Regex = Union[Empty, Epsilon, Atom, Or, Seq, Star]

EMPTY = Empty()
EPSILON = Epsilon()


def alt(a: Regex, b: Regex) -> Regex:
    if isinstance(a, Empty):
        return b
    if isinstance(b, Empty):
        return a
    if a == b:
        return a
    return Or(a, b)


def seq(a: Regex, b: Regex) -> Regex:
    if isinstance(a, Empty) or isinstance(b, Empty):
        return EMPTY
    if isinstance(a, Epsilon):
        return b
    if isinstance(b, Epsilon):
        return a
    return Seq(a, b)


def star(a: Regex) -> Regex:
    if isinstance(a, (Empty, Epsilon)):
        return EPSILON
    if isinstance(a, Star):
        return a
    return Star(a)


def atom(sym) -> Regex:
    if sym is EPS or sym == "":
        return EPSILON
    return Atom(sym)


# ----------------------------------------------------------- conversion


def to_regex(a: fa.Automaton) -> Regex:
    """State elimination, removing the least connected state first."""
    a = fa.determinize_minimize(a)
    if not a.finals:
        return EMPTY
    start, final = a.n, a.n + 1
    edges: dict = {}

    def add(p, q, r):
        edges[(p, q)] = alt(edges.get((p, q), EMPTY), r)

    for s, sym, d in a.transitions:
        add(s, d, atom(sym))
    add(start, a.initial, EPSILON)
    for f in a.finals:
        add(f, final, EPSILON)
    remaining = set(range(a.n))
    while remaining:
        def degree(k):
            return sum(1 for (p, q) in edges if (p == k) != (q == k))

        k = min(remaining, key=lambda q: (degree(q), q))
        remaining.discard(k)
        loop = edges.pop((k, k), EMPTY)
        loop_re = star(loop)
        ins = [(p, r) for (p, q), r in edges.items() if q == k]
        outs = [(q, r) for (p, q), r in edges.items() if p == k]
        for p, _ in ins:
            del edges[(p, k)]
        for q, _ in outs:
            del edges[(k, q)]
        for p, rin in ins:
            for q, rout in outs:
                add(p, q, seq(rin, seq(loop_re, rout)))
    return edges.get((start, final), EMPTY)


def to_automaton(r: Regex) -> fa.Automaton:
    """Thompson construction followed by canonicalization."""
    trans = []
    counter = [0]

    def new():
        counter[0] += 1
        return counter[0] - 1

    def build(node):
        s, t = new(), new()
        if isinstance(node, Empty):
            pass
        elif isinstance(node, Epsilon):
            trans.append((s, EPS, t))
        elif isinstance(node, Atom):
            trans.append((s, node.sym, t))
        elif isinstance(node, Or):
            for part in (node.left, node.right):
                ps, pt = build(part)
                trans.append((s, EPS, ps))
                trans.append((pt, EPS, t))
        elif isinstance(node, Seq):
            ls, lt = build(node.left)
            rs, rt = build(node.right)
            trans.extend([(s, EPS, ls), (lt, EPS, rs), (rt, EPS, t)])
        elif isinstance(node, Star):
            ps, pt = build(node.inner)
            trans.extend([(s, EPS, t), (s, EPS, ps), (pt, EPS, ps), (pt, EPS, t)])
        else:
            raise TypeError(f"not a regex: {node!r}")
        return s, t

    s, t = build(r)
    return fa.determinize_minimize(fa.Automaton(counter[0], s, (t,), trans))


# -------------------------------------------------------------- printing


def _sym_text(sym) -> str:
    return "⊤" if sym is TOP else sym


def to_string(r: Regex) -> str:
    def go(node, ctx):
        if isinstance(node, Empty):
            return "∅"
        if isinstance(node, Epsilon):
            return "ε"
        if isinstance(node, Atom):
            return _sym_text(node.sym)
        if isinstance(node, Or):
            parts = []
            _flatten_or(node, parts)
            body = " || ".join(go(p, "or") for p in parts)
            return f"({body})" if ctx in ("seq", "star") else body
        if isinstance(node, Seq):
            return go(node.left, "seq") + go(node.right, "seq")
        inner = go(node.inner, "star")
        if isinstance(node.inner, (Atom, Or)) and not inner.startswith("("):
            inner = f"({inner})"
        elif isinstance(node.inner, Seq):
            inner = f"({inner})"
        return inner + "*"

    return go(r, "top")


def _flatten_or(node, out):
    if isinstance(node, Or):
        _flatten_or(node.left, out)
        _flatten_or(node.right, out)
    else:
        out.append(node)


def max_length(r: Regex) -> float:
    """Longest concrete string length; infinite under stars or ⊤."""
    if isinstance(r, Empty):
        return -1
    if isinstance(r, Epsilon):
        return 0
    if isinstance(r, Atom):
        return float("inf") if r.sym is TOP else len(r.sym)
    if isinstance(r, Or):
        return max(max_length(r.left), max_length(r.right))
    if isinstance(r, Seq):
        a, b = max_length(r.left), max_length(r.right)
        return -1 if a < 0 or b < 0 else a + b
    inner = max_length(r.inner)
    return float("inf") if inner > 0 else 0


# ----------------------------------------------------------------- rsubs


class PartialSubstring(NamedTuple):
    text: str
    to_skip: int
    to_take: int


def rsubs(r: Regex, i: int, j: int) -> set:
    """Partial substrings of length ``j`` starting at ``i`` for strings of ``r``.

    Triples with ``to_skip == to_take == 0`` are completed substrings.  A
    request for zero characters yields the empty substring whenever some
    string is long enough to start at ``i``.
    """
    if i < 0 or j < 0:
        raise ValueError("negative substring bounds")
    if j == 0:
        return {PartialSubstring("", 0, 0)} if max_length(r) >= i else set()
    memo: dict = {}
    return {PartialSubstring(*t) for t in _rsubs(r, i, j, memo)}


def _rsubs(r, i, j, memo) -> frozenset:
    if j == 0 or isinstance(r, Empty):
        return frozenset()
    key = (id(r), i, j)
    got = memo.get(key)
    if got is not None:
        return got
    if isinstance(r, Epsilon):
        res = frozenset({("", i, j)})
    elif isinstance(r, Atom) and r.sym is not TOP:
        s = r.sym
        if i > len(s):
            res = frozenset({("", i - len(s), j)})
        elif i + j > len(s):
            res = frozenset({(s[i:], 0, j - len(s) + i)})
        else:
            res = frozenset({(s[i:i + j], 0, 0)})
    elif isinstance(r, Atom):
        out = {("", i - k, j) for k in range(i + 1)}
        out.update((BULLET * k, 0, j - k) for k in range(j + 1))
        res = frozenset(out)
    elif isinstance(r, Seq):
        out = set()
        for t1, i1, j1 in _rsubs(r.left, i, j, memo):
            if j1 == 0:
                out.add((t1, i1, j1))
            else:
                for t2, i2, j2 in _rsubs(r.right, i1, j1, memo):
                    out.add((t1 + t2, i2, j2))
        res = frozenset(out)
    elif isinstance(r, Or):
        res = _rsubs(r.left, i, j, memo) | _rsubs(r.right, i, j, memo)
    elif isinstance(r, Star):
        result = {("", i, j)}
        frontier = [("", i, j)]
        while frontier:
            partial = []
            for tn, i_n, j_n in frontier:
                for suff, i_s, j_s in _rsubs(r.inner, i_n, j_n, memo):
                    cand = (tn + suff, i_s, j_s)
                    if cand not in result:
                        result.add(cand)
                        partial.append(cand)
            frontier = partial
        res = frozenset(result)
    else:
        raise TypeError(f"not a regex: {r!r}")
    memo[key] = res
    return res


def completed_texts(parts) -> set:
    return {p[0] for p in parts if p[1] == 0 and p[2] == 0}


def text_to_symbols(text: str) -> tuple:
    """Maximal concrete runs become one symbol; each run of bullets becomes ⊤."""
    out = []
    buf = []
    for c in text:
        if c == BULLET:
            if buf:
                out.append("".join(buf))
                buf = []
            if not out or out[-1] is not TOP:
                out.append(TOP)
        else:
            buf.append(c)
    if buf:
        out.append("".join(buf))
    return tuple(out)


def completed_to_automaton(parts) -> fa.Automaton:
    texts = completed_texts(parts)
    if not texts:
        return fa.empty()
    return fa.from_symbol_strings(text_to_symbols(t) for t in sorted(texts))


__all__ = [
    "BULLET", "EMPTY", "EPSILON", "Atom", "Empty", "Epsilon", "Or",
    "PartialSubstring", "Regex", "Seq", "Star", "alt", "atom",
    "completed_texts", "completed_to_automaton", "max_length", "rsubs", "seq",
    "star", "text_to_symbols", "to_automaton", "to_regex", "to_string",
]
