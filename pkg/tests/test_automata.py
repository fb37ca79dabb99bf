import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from figures import (
    length_example,
    length_example_acyclic,
    widening_after,
    widening_before,
    widening_result,
)
from oracles import expand
from tarsis.automata import core as fa
from tarsis.automata import serialize
from tarsis.automata.symbols import EPS, FRESH, TOP, show, sym_key
from tarsis.errors import CyclicAutomaton, EmptyLanguage

words = st.text(alphabet="abc", max_size=6)
languages = st.lists(words, min_size=1, max_size=4)


def lang(a):
    return fa.strings(a)


# ---------------------------------------------------------------- symbols


def test_symbol_order_and_display():
    syms = ["b", TOP, EPS, "a"]
    assert sorted(syms, key=sym_key) == [EPS, TOP, "a", "b"]
    assert show(TOP) == "⊤"
    assert repr(TOP) == "⊤"


def test_automaton_rejects_bad_symbols():
    with pytest.raises((TypeError, ValueError)):
        fa.Automaton(2, 0, {1}, [(0, 3, 1)])


# ------------------------------------------------------------ construction


def test_from_strings_examples():
    assert not fa.empty().finals
    assert lang(fa.from_strings([])) == set()
    a = fa.from_strings(["a"])
    assert a.n == 2 and lang(a) == {"a"}
    assert lang(fa.from_strings(["abc", "ab"])) == {"abc", "ab"}


def test_literal_is_one_symbol():
    a = fa.literal("hello")
    assert fa.symbol_strings(a) == [("hello",)]
    assert fa.equivalent(a, fa.from_strings(["hello"]))


def test_minimize_examples():
    chain = fa.from_strings(["ab"])
    assert fa.determinize_minimize(chain) == chain
    twin = fa.Automaton(5, 0, {2, 4}, [(0, EPS, 1), (0, EPS, 3), (1, "a", 5), (5, "b", 2), (3, "a", 6), (6, "b", 4)][:2] +
                        [(1, "a", 2), (3, "a", 4)])
    assert fa.determinize_minimize(twin).n == 2
    # a | ab over single characters: 3 states
    nfa = fa.Automaton(4, 0, {1, 3}, [(0, "a", 1), (0, "a", 2), (2, "b", 3)])
    assert fa.determinize_minimize(nfa).n == 3


@given(languages)
def test_minimize_is_idempotent_and_preserves_language(ws):
    a = fa.from_strings(ws)
    m = fa.determinize_minimize(a)
    assert fa.determinize_minimize(m) == m
    assert lang(m) == set(ws)


@given(languages, languages)
def test_canonical_equality_matches_language_equality(xs, ys):
    a = fa.determinize_minimize(fa.from_strings(xs))
    b = fa.determinize_minimize(fa.from_strings(ys))
    assert (a == b) == (set(xs) == set(ys))


# ---------------------------------------------------------------- flatten


def test_flatten_splits_symbols():
    f = fa.flatten(fa.literal("ab"), "ab")
    assert fa.symbol_strings(fa.determinize_minimize(f)) == [("a", "b")]


def test_flatten_top_reads_any_alphabet_char():
    f = fa.determinize_minimize(fa.flatten(fa.top(), "xy"))
    for s in ["", "x", "xy", FRESH]:
        assert fa.member(f, s)


def test_top_member_anything():
    a = fa.concat(fa.literal("a"), fa.top(), fa.literal("b"))
    for s in ["ab", "aqb", "aqqb", "a b"]:
        assert fa.member(a, s)
    assert not fa.member(a, "ba")
    assert fa.member(fa.top(), "anything at all")


def test_member_on_first_widening_operand():
    a = widening_before()
    assert fa.member(a, "id = 42")
    assert fa.member(a, "")
    assert not fa.member(a, "x")


# ----------------------------------------------------------------- lattice


def test_lub_examples():
    a = fa.from_strings(["ab"])
    assert fa.lub(a, fa.empty()) == fa.determinize_minimize(a)
    assert lang(fa.lub(fa.from_strings(["a"]), fa.from_strings(["b"]))) == {"a", "b"}
    u = fa.lub(widening_before(), widening_after())
    assert fa.member(u, "id = xid = y")
    assert fa.member(u, "id = x")


def test_leq_examples():
    a = fa.from_strings(["ab"])
    assert fa.leq(a, a)
    assert fa.leq(a, fa.top())
    split = fa.Automaton(3, 0, {2}, [(0, "a", 1), (1, "b", 2)])
    joined = fa.literal("ab")
    assert fa.leq(split, joined) and fa.leq(joined, split)
    assert not fa.leq(fa.top(), a)


@settings(max_examples=60)
@given(languages, languages, languages)
def test_lub_is_least(xs, ys, zs):
    a, b = fa.from_strings(xs), fa.from_strings(ys)
    u = fa.lub(a, b)
    assert fa.leq(a, u) and fa.leq(b, u)
    c = fa.from_strings(xs + ys + zs)
    assert fa.leq(u, c)


@settings(max_examples=60)
@given(languages, languages)
def test_leq_is_inclusion(xs, ys):
    assert fa.leq(fa.from_strings(xs), fa.from_strings(ys)) == set(xs).issubset(ys)


def test_intersect_empty_examples():
    a = fa.from_strings(["ab"])
    assert fa.intersect_empty(a, fa.empty())
    assert not fa.intersect_empty(fa.from_strings(["a"]), fa.from_strings(["a", "b"]))
    assert not fa.intersect_empty(a, fa.factor_automaton(fa.from_strings(["xaby"])))
    assert fa.intersect_empty(fa.literal("zz"), fa.factor_automaton(fa.literal("abc")))


@settings(max_examples=60)
@given(st.lists(st.sampled_from(["a", "b", "ab", "c"]), max_size=3),
       st.lists(st.sampled_from(["a", "b", "ab", "c"]), max_size=3),
       st.text(alphabet="abcz", max_size=5))
def test_member_agrees_with_top_expansion(left, right, s):
    syms = tuple(left) + (TOP,) + tuple(right)
    a = fa.from_symbol_strings([syms])
    # ⊤ matches s exactly when s = prefix · anything · suffix
    pre, suf = "".join(left), "".join(right)
    want = len(s) >= len(pre) + len(suf) and s.startswith(pre) and s.endswith(suf)
    assert fa.member(a, s) == want
    for t in expand(syms):
        assert fa.member(a, t)


# ----------------------------------------------------------------- paths


def test_cycles_and_top():
    assert not fa.has_cycle(fa.from_strings(["abc"]))
    loop = widening_result()
    assert fa.has_cycle(loop) and fa.reads_top(loop)
    acyclic = length_example_acyclic()
    assert not fa.has_cycle(acyclic) and not fa.reads_top(acyclic)


def test_enumerate_paths():
    assert len(fa.enumerate_paths(fa.from_strings(["ab"]))) == 1
    assert sorted(fa.symbol_strings(length_example()), key=lambda p: [sym_key(s) for s in p]) == [
        ("aa", TOP, "bb"), ("bbb", "bbb")]
    diamond = fa.Automaton(4, 0, {3}, [(0, "a", 1), (0, "b", 2), (1, "c", 3), (2, "d", 3)])
    assert len(fa.enumerate_paths(diamond)) == 2
    with pytest.raises(CyclicAutomaton):
        fa.enumerate_paths(widening_result())


def test_length_bounds():
    assert fa.length_bounds(length_example()) == (4, float("inf"))
    assert fa.length_bounds(fa.from_strings(["abc"])) == (3, 3)
    assert fa.length_bounds(length_example_acyclic()) == (3, 7)
    with pytest.raises(EmptyLanguage):
        fa.length_bounds(fa.empty())


@given(languages)
def test_length_bounds_match_language(ws):
    lo, hi = fa.length_bounds(fa.from_strings(ws))
    assert (lo, hi) == (min(map(len, ws)), max(map(len, ws)))


def test_factor_automaton_examples():
    f = fa.factor_automaton(fa.from_strings(["ab"]))
    assert lang(f) == {"", "a", "b", "ab"}
    assert not fa.factor_automaton(fa.empty()).finals
    assert fa.member(fa.factor_automaton(fa.top()), "whatever")


@given(languages, st.text(alphabet="abc", max_size=4))
def test_factor_automaton_membership(ws, t):
    f = fa.factor_automaton(fa.from_strings(ws))
    assert fa.member(f, t) == any(t in w for w in ws)


def test_single_path():
    assert fa.is_single_path(fa.from_strings(["a", "aa"])) == (True, "aa")
    assert fa.is_single_path(fa.from_strings(["a", "b"])) == (False, None)
    assert fa.is_single_path(fa.top()) == (False, None)


# ------------------------------------------------------------- serialize


def test_json_round_trip():
    a = widening_result()
    obj = json.loads(serialize.to_json(a))
    assert {t["label"] for t in obj["transitions"]} == {"id = ", "⊤"}
    assert "\\u22a4" in serialize.to_json(a).lower()
    assert fa.determinize_minimize(serialize.from_json_obj(obj)) == fa.determinize_minimize(a)


def test_dot_mentions_every_state():
    dot = serialize.to_dot(length_example())
    assert dot.startswith("digraph")
    assert all(f"{q}" in dot for q in range(5))
