"""Acceptance criteria, one test and one PASS/FAIL line each.

Run under pytest (lines appear in the terminal summary) or directly with
``python tests/test_acceptance.py``.
"""

import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

import soundness  # noqa: E402
from acceptance_log import record  # noqa: E402
from figures import (  # noqa: E402
    length_example,
    replace_may_result,
    replace_source,
    widening_after,
    widening_before,
    widening_result,
)
from oracles import brute_substrings, random_automaton, random_regex  # noqa: E402
from tarsis import domain as D  # noqa: E402
from tarsis import regex as R  # noqa: E402
from tarsis.analysis import AnalysisConfig, abstract_run  # noqa: E402
from tarsis.automata import core as fa  # noqa: E402
from tarsis.automata.symbols import TOP  # noqa: E402
from tarsis.automata.widening import widen  # noqa: E402
from tarsis.imp import parse  # noqa: E402
from tarsis.values.intervals import INF, Interval  # noqa: E402

CORPUS = Path(__file__).resolve().parent.parent / "corpus"
PROGRAMS = ["subs", "loop", "count", "tostring"]


def load(name):
    return parse((CORPUS / f"{name}.imp").read_text())


def run(name, domain):
    return abstract_run(load(name), AnalysisConfig(domain=domain))


def verdicts(res):
    return [rec.verdict for rec in res.asserts]


def first_value(res, var):
    return res.asserts[0].memory[var].val


def rx(*parts):
    """Regex of a sequence of pieces; plain strings and ⊤ are atoms."""
    r = R.EPSILON
    for p in parts:
        r = R.seq(r, R.atom(p) if isinstance(p, str) or p is TOP else p)
    return r


def lang(*parts):
    return R.to_automaton(rx(*parts))


def _finish(number, title, problems, extra=""):
    ok = not problems
    detail = extra if ok else "; ".join(problems[:5])
    record(number, title, ok, detail)
    assert ok, detail


# ------------------------------------------------------------------ 1


def test_criterion_1_case_study_values():
    expected = {
        ("subs", "tarsis"): fa.from_strings(["ring test pas", "ring test fai"]),
        ("loop", "tarsis"): lang("Repeat: ", R.star(rx(TOP, "!"))),
        ("subs", "charfa"): lang("ring test ", R.alt(R.atom("pas"), R.atom("fai"))),
        ("loop", "charfa"): lang("Repeat: ", R.star(R.atom(TOP))),
    }
    problems = []
    for (name, domain), want in expected.items():
        got = first_value(run(name, domain), "res")
        if not fa.equivalent(got, want):
            problems.append(f"{name}/{domain} differs")
    _finish(1, "case-study values (subs, loop; Tarsis and CharFA)", problems, "4 values language-equal")


# ------------------------------------------------------------------ 2


def test_criterion_2_case_study_alarms():
    expected = {
        ("subs", "tarsis"): [None, "PA", "PA", "DA"],
        ("loop", "tarsis"): [None, "PA", "PA"],
        ("loop", "prefix"): [None, "PA", "PA"],
        ("loop", "suffix"): ["PA", "PA", "PA"],
    }
    problems = []
    for (name, domain), want in expected.items():
        got = verdicts(run(name, domain))
        if got != want:
            problems.append(f"{name}/{domain}: {got} != {want}")
    _finish(2, "case-study alarms (subs, loop; Tarsis, Prefix, Suffix)", problems, "4 verdict lists match")


# ------------------------------------------------------------------ 3


def test_criterion_3_tostring_and_count():
    problems = []
    res = run("tostring", "tarsis")
    want = R.to_automaton(R.alt(rx("People: {}"), rx("People: {", R.star(rx(TOP, ",")), TOP, "}")))
    if not fa.equivalent(first_value(res, "res"), want):
        problems.append("tostring value differs")
    if verdicts(res) != [None, "PA", "PA"]:
        problems.append(f"tostring verdicts {verdicts(res)}")
    for domain in ("tarsis", "charfa"):
        res = run("count", domain)
        if first_value(res, "count") != Interval(2, 3):
            problems.append(f"count/{domain} interval {first_value(res, 'count')}")
        if verdicts(res) != [None, "DA", "PA"]:
            problems.append(f"count/{domain} verdicts {verdicts(res)}")
    _finish(3, "toString value and alarms, count interval and alarms", problems,
            "toString language-equal, count [2, 3]")


# ------------------------------------------------------------------ 4


def test_criterion_4_micro_examples():
    problems = []
    if D.abs_length(length_example()) != Interval(4, INF):
        problems.append(f"absLength gives {D.abs_length(length_example())}")
    w1 = widen(fa.from_strings(["", "a"]), fa.from_strings(["", "a", "aa"]), 1)
    if not fa.equivalent(w1, fa.star(fa.literal("a"))):
        problems.append("n=1 widening is not a*")
    w2 = widen(widening_before(), widening_after(), 2)
    if not fa.equivalent(w2, widening_result()):
        problems.append("n=2 widening is not the (id = ⊤)* loop")
    may = D.abs_replace(replace_source(), fa.from_strings(["bbb", "cc"]), fa.from_strings(["rr"]))
    if not fa.equivalent(may, replace_may_result()):
        problems.append("may-replace language differs")
    _finish(4, "worked micro-examples (length, two widenings, may-replace)", problems, "4 examples")


# ------------------------------------------------------------------ 5

SOUNDNESS_CASES = 10_000


def test_criterion_5_soundness():
    problems = []
    t0 = time.perf_counter()
    for op in soundness.CASES:
        failures = soundness.run(op, SOUNDNESS_CASES)
        if failures:
            problems.append(f"{op}: {len(failures)} failing cases, first {failures[0]}")
    elapsed = time.perf_counter() - t0
    if elapsed >= 60:
        problems.append(f"took {elapsed:.1f} s")
    _finish(5, "soundness suite", problems,
            f"{len(soundness.CASES)} ops x {SOUNDNESS_CASES} cases, 0 failures, {elapsed:.1f} s")


# ------------------------------------------------------------------ 6


def test_criterion_6_widening_laws():
    rng = random.Random(6)
    problems = []
    pairs = 1000
    longest = 0
    for _ in range(pairs):
        a, b = random_automaton(rng), random_automaton(rng)
        for n in (1, 2, 3):
            if not fa.leq(fa.lub(a, b), widen(a, b, n)):
                problems.append(f"lub not below widen (n={n})")
            x = a
            for step in range(1, 51):
                nxt = widen(x, fa.lub(x, fa.concat(x, random_automaton(rng))), n)
                if nxt == x:
                    break
                x = nxt
            else:
                problems.append(f"chain did not stabilize (n={n})")
            longest = max(longest, step)
    _finish(6, "widening laws", problems,
            f"{pairs} pairs x n in 1..3, longest chain {longest} steps")


# ------------------------------------------------------------------ 7


def test_criterion_7_rsubs_oracle():
    rng = random.Random(7)
    problems = []
    regexes = 200
    for _ in range(regexes):
        r = random_regex(rng)
        for i in range(9):
            for j in range(i, 9):
                got = R.completed_texts(R.rsubs(r, i, j - i))
                want = brute_substrings(r, i, j, "ab")
                if got != want:
                    problems.append(f"{R.to_string(r)} [{i},{j}): {sorted(got ^ want)[:3]}")
    _finish(7, "rsubs equals brute-force substrings", problems,
            f"{regexes} regexes x all 0<=i<=j<=8")


# ------------------------------------------------------------------ 8


def _timed(name, domain, repeat=3):
    best = INF
    for _ in range(repeat):
        fa._det_min_cached.cache_clear()
        fa.char_dfa.cache_clear()
        t0 = time.perf_counter()
        run(name, domain)
        best = min(best, time.perf_counter() - t0)
    return best


def test_criterion_8_performance():
    problems = []
    times = {name: _timed(name, "tarsis") for name in PROGRAMS}
    for name, t in times.items():
        if t >= 2.0:
            problems.append(f"{name} took {t:.2f} s")
    charfa = _timed("tostring", "charfa")
    if times["tostring"] >= charfa:
        problems.append(f"tostring: Tarsis {times['tostring']:.3f} s not faster than CharFA {charfa:.3f} s")
    shown = ", ".join(f"{n} {t * 1000:.0f} ms" for n, t in times.items())
    _finish(8, "performance", problems, f"Tarsis {shown}; CharFA tostring {charfa * 1000:.0f} ms")


if __name__ == "__main__":
    failed = 0
    for fn in [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]:
        try:
            fn()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
