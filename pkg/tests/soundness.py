"""Randomized soundness harness: concrete collecting results against γ.

Each case draws finite languages, lifts them to automata, applies the
abstract operation, and checks that every concrete result (computed with
Python's own string methods) is described by the abstract one.
"""

from __future__ import annotations

import random

from oracles import TOP_SAMPLES, expand, random_language, random_symbol_string
from tarsis import domain as D
from tarsis.automata import core as fa
from tarsis.values.intervals import Interval

ALPHABET = "abc"


def _finite(rng):
    words = random_language(rng, ALPHABET, 6, 4)
    return words, fa.from_strings(words)


def _with_top(rng):
    """A language of up to two ⊤-bearing symbol strings and its sample expansion."""
    syms = [random_symbol_string(rng, ALPHABET, 6) for _ in range(rng.randint(1, 2))]
    words = set()
    for s in syms:
        words |= expand(s, TOP_SAMPLES)
    return sorted(words), fa.from_symbol_strings(syms)


def _interval(rng, hi=7):
    a = rng.randint(0, hi)
    return Interval(a, rng.randint(a, min(hi, a + 3)))


def case_concat(rng, top=False):
    gen = _with_top if top else _finite
    xs, x = gen(rng)
    ys, y = gen(rng)
    got = D.abs_concat(x, y)
    return [s + t for s in xs for t in ys if not fa.member(got, s + t)]


def case_length(rng, top=False):
    xs, x = (_with_top if top else _finite)(rng)
    got = D.abs_length(x)
    return [s for s in xs if len(s) not in got]


def case_contains(rng, top=False):
    gen = _with_top if top else _finite
    xs, x = gen(rng)
    ys, y = gen(rng)
    got = D.abs_contains(x, y)
    return [(s, t) for s in xs for t in ys if (t in s) not in got]


def case_index_of(rng, top=False):
    xs, x = _finite(rng)
    ys, y = _finite(rng)
    got = D.abs_index_of(x, y)
    return [(s, t) for s in xs for t in ys if s.find(t) not in got]


def case_replace(rng, top=False):
    xs, x = _finite(rng)
    ys, y = _finite(rng)
    rs, r = _finite(rng)
    got = D.abs_replace(x, y, r)
    bad = []
    for s in xs:
        for t in ys:
            for u in rs:
                c = s.replace(t, u)
                if not fa.member(got, c):
                    bad.append((s, t, u))
    return bad


def case_substring(rng, top=False):
    xs, x = _finite(rng)
    i, j = _interval(rng), _interval(rng)
    got = D.abs_substring(x, i, j)
    bad = []
    for s in xs:
        for a in i:
            for b in j:
                if 0 <= a <= b <= len(s) and not fa.member(got, s[a:b]):
                    bad.append((s, a, b))
    return bad


CASES = {
    "concat": (case_concat, False),
    "length": (case_length, False),
    "contains": (case_contains, False),
    "indexOf": (case_index_of, False),
    "replace": (case_replace, False),
    "substring": (case_substring, False),
    "concat/top": (case_concat, True),
    "length/top": (case_length, True),
    "contains/top": (case_contains, True),
}


def run(op: str, cases: int, seed: int = 0):
    """Returns the list of failing cases, each a (case index, witnesses) pair."""
    fn, top = CASES[op]
    rng = random.Random(f"{op}/{seed}")
    failures = []
    for k in range(cases):
        bad = fn(rng, top)
        if bad:
            failures.append((k, bad[:3]))
    return failures
