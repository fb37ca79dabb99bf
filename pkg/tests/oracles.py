"""Independent oracles and random generators shared by the tests.

Nothing here goes through the automata code: regex languages are decided
with Brzozowski derivatives over the regex tree, and ⊤ is expanded by brute
force over a small sample of strings.
"""

from __future__ import annotations

import itertools
import random

from tarsis import regex as R
from tarsis.automata import core as fa
from tarsis.automata.symbols import TOP

# ------------------------------------------------------ regex derivatives


def nullable(r) -> bool:
    if isinstance(r, (R.Epsilon, R.Star)):
        return True
    if isinstance(r, R.Atom):
        return r.sym == ""
    if isinstance(r, R.Or):
        return nullable(r.left) or nullable(r.right)
    if isinstance(r, R.Seq):
        return nullable(r.left) and nullable(r.right)
    return False


def deriv(r, c: str):
    """Brzozowski derivative of a ⊤-free regex by one character."""
    if isinstance(r, (R.Empty, R.Epsilon)):
        return R.EMPTY
    if isinstance(r, R.Atom):
        s = r.sym
        if s and s[0] == c:
            return R.EPSILON if len(s) == 1 else R.Atom(s[1:])
        return R.EMPTY
    if isinstance(r, R.Or):
        return R.alt(deriv(r.left, c), deriv(r.right, c))
    if isinstance(r, R.Seq):
        d = R.seq(deriv(r.left, c), r.right)
        return R.alt(d, deriv(r.right, c)) if nullable(r.left) else d
    if isinstance(r, R.Star):
        return R.seq(deriv(r.inner, c), r)
    raise TypeError(r)


def is_empty(r) -> bool:
    if isinstance(r, R.Empty):
        return True
    if isinstance(r, R.Or):
        return is_empty(r.left) and is_empty(r.right)
    if isinstance(r, R.Seq):
        return is_empty(r.left) or is_empty(r.right)
    return False


def live_prefixes(r, length: int, alphabet: str) -> set:
    """Strings of exactly ``length`` characters that start some word of ``r``."""
    out = set()

    def go(node, acc):
        if is_empty(node):
            return
        if len(acc) == length:
            out.add(acc)
            return
        for c in alphabet:
            go(deriv(node, c), acc + c)

    go(r, "")
    return out


def brute_substrings(r, i: int, j: int, alphabet: str) -> set:
    """``s[i:j]`` for every word ``s`` of ``r`` with at least ``j`` characters."""
    return {p[i:j] for p in live_prefixes(r, j, alphabet)}


def random_regex(rng: random.Random, depth: int = 3, atoms=("a", "b", "ab", "ba", "aab")):
    if depth == 0 or rng.random() < 0.25:
        return R.Atom(rng.choice(atoms))
    kind = rng.choice(("or", "seq", "seq", "star"))
    if kind == "star":
        return R.Star(random_regex(rng, depth - 1, atoms))
    left = random_regex(rng, depth - 1, atoms)
    right = random_regex(rng, depth - 1, atoms)
    return R.Or(left, right) if kind == "or" else R.Seq(left, right)


# ------------------------------------------------------------ ⊤ expansion

TOP_SAMPLES = ("", "a", "b", "zz", "a!", "q", "ab")


def expand(symbols, samples=TOP_SAMPLES):
    """Concrete strings obtained by substituting samples for every ⊤."""
    slots = [samples if s is TOP else (s,) for s in symbols]
    return {"".join(p) for p in itertools.product(*slots)}


# -------------------------------------------------------------- generators


def random_word(rng: random.Random, alphabet: str = "abc", max_len: int = 6) -> str:
    return "".join(rng.choice(alphabet) for _ in range(rng.randint(0, max_len)))


def random_language(rng: random.Random, alphabet: str = "abc", max_len: int = 6, size: int = 4) -> list:
    return sorted({random_word(rng, alphabet, max_len) for _ in range(rng.randint(1, size))})


def random_symbol_string(rng: random.Random, alphabet: str = "abc", max_len: int = 6) -> tuple:
    """A symbol string with at least one ⊤ among short literal chunks."""
    parts = []
    budget = rng.randint(0, max_len)
    while budget > 0:
        k = rng.randint(1, budget)
        parts.append("".join(rng.choice(alphabet) for _ in range(k)))
        budget -= k
    parts.insert(rng.randint(0, len(parts)), TOP)
    return tuple(parts)


def random_automaton(rng: random.Random, symbols=("a", "b", "ab", TOP), max_states: int = 5) -> fa.Automaton:
    n = rng.randint(1, max_states)
    trans = [(rng.randrange(n), rng.choice(symbols), rng.randrange(n))
             for _ in range(rng.randint(0, 2 * n))]
    finals = {q for q in range(n) if rng.random() < 0.4} or {n - 1}
    return fa.Automaton(n, 0, finals, trans)
