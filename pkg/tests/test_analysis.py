import itertools
import json
import random
from pathlib import Path

import pytest

from tarsis.analysis import (
    AnalysisConfig,
    Inputs,
    abstract_run,
    build_report,
    collecting_eval,
    concrete_run,
    eval_expr,
)
from tarsis.errors import OutOfFuel, SubstringOutOfRange
from tarsis.imp import parse, parse_expr
from tarsis.values.intervals import Interval

CORPUS = Path(__file__).resolve().parent.parent / "corpus"
PROGRAMS = ["subs", "loop", "count", "tostring"]
GOLDEN = json.loads((CORPUS / "golden.json").read_text())


def load(name):
    return parse((CORPUS / f"{name}.imp").read_text())


def ev(src, **mem):
    return eval_expr(parse_expr(src), mem, Inputs())


# --------------------------------------------------------------- concrete


def test_concrete_string_operations():
    assert ev('indexOf("bba", "b")') == 0
    assert ev('indexOf("bba", "z")') == -1
    assert ev('replace("abc", "zz", "q")') == "abc"
    assert ev('replace("abab", "ab", "q")') == "qq"
    assert ev('substring("substring test passed", 5, 18)') == "ring test pas"
    assert ev('contains("abc", "")') is True
    assert ev("7 / -2") == -3


def test_substring_out_of_range():
    with pytest.raises(SubstringOutOfRange):
        ev('substring("abc", 2, 5)')
    with pytest.raises(SubstringOutOfRange):
        ev('substring("abc", 2, 1)')


def test_out_of_fuel():
    with pytest.raises(OutOfFuel):
        concrete_run(parse("while (true) skip;"), fuel=1000)


def test_count_program_concrete():
    p = load("count")
    assert concrete_run(p, inputs=Inputs(nondets=[True])).memory["count"] == 3
    assert concrete_run(p, inputs=Inputs(nondets=[False])).memory["count"] == 2


def test_failed_asserts_are_recorded():
    r = concrete_run(parse("x = 1;\nassert(x == 2);\nassert(x == 1);"))
    assert r.failed_asserts == [(2, 1)]


def test_collecting_eval_examples():
    e = parse_expr("length(s)")
    assert collecting_eval(e, [{"s": "a"}, {"s": "bb"}]) == ({1, 2}, False)
    e = parse_expr("contains(s, t)")
    assert collecting_eval(e, [{"s": "ab", "t": "b"}, {"s": "cd", "t": "b"}])[0] == {True, False}
    e = parse_expr("substring(s, 5, 18)")
    mems = [{"s": "substring test passed"}, {"s": "substring test failed"}]
    assert collecting_eval(e, mems)[0] == {"ring test pas", "ring test fai"}
    assert collecting_eval(e, [{"s": "short"}]) == (set(), True)


# --------------------------------------------------------------- abstract


@pytest.mark.parametrize("domain", ["tarsis", "charfa", "prefix", "suffix", "charinclusion"])
@pytest.mark.parametrize("name", PROGRAMS + ["empty"])
def test_corpus_verdicts_match_golden(name, domain):
    r = abstract_run(load(name), AnalysisConfig(domain=domain))
    assert [rec.verdict for rec in r.asserts] == GOLDEN[name][domain]


def test_count_interval():
    r = abstract_run(load("count"))
    assert r.asserts[0].memory["count"].val == Interval(2, 3)


def test_report_is_deterministic():
    p = load("loop")
    a = build_report(abstract_run(p), "loop.imp", "tarsis").to_json()
    b = build_report(abstract_run(p), "loop.imp", "tarsis").to_json()
    assert a == b


def test_unreachable_assert_has_no_alarm():
    r = abstract_run(parse("x = 1;\nif (x == 2) assert(false);"))
    assert r.asserts[0].verdict is None and r.asserts[0].memory is None


def test_alarm_kinds():
    r = abstract_run(parse("x = 1;\nassert(x == 2);\nassert(nondet);\nassert(x == 1);"))
    assert [rec.verdict for rec in r.asserts] == ["DA", "PA", None]


@pytest.mark.parametrize("name", PROGRAMS)
def test_termination_grid(name):
    p = load(name)
    for n, tau, k in itertools.product([1, 2, 3], [1, 5, 10], [0, 4, 8]):
        abstract_run(p, AnalysisConfig(widening_n=n, tau=tau, partition_bound=k))


# ------------------------------------------------ end-to-end soundness

READS = ["", "a", "t", "!", "x,y", "not", "People", "abc"]


def _random_inputs(rng):
    reads = [rng.choice(READS) for _ in range(rng.randint(1, 6))]
    nondets = [rng.random() < 0.6 for _ in range(rng.randint(1, 6))] + [False]
    return Inputs(reads, nondets)


EXTRA = {
    "mixed": """
        s = read();
        t = "ab";
        if (nondet) t = t + s; else t = replace(t, "b", "c");
        n = indexOf(t, "b");
        k = length(t);
        c = contains(t, "c");
        assert(n < k);
        assert(c);
    """,
    "slices": """
        s = "hello world";
        i = 0;
        while (nondet && i < 5) i = i + 1;
        u = substring(s, i, i + 3);
        assert(contains(u, "l"));
    """,
}


def _programs():
    for name in PROGRAMS:
        yield name, load(name)
    for name, src in EXTRA.items():
        yield name, parse(src)


@pytest.mark.parametrize("domain", ["tarsis", "charfa", "prefix", "suffix", "charinclusion"])
def test_end_to_end_soundness(domain):
    rng = random.Random(21)
    for name, p in _programs():
        res = abstract_run(p, AnalysisConfig(domain=domain))
        final = res.final_memory()
        V = res.values
        verdicts = {rec.node.pos: rec for rec in res.asserts}
        for _ in range(60):
            try:
                run = concrete_run(p, inputs=_random_inputs(rng), fuel=20_000)
            except (OutOfFuel, SubstringOutOfRange):
                continue
            for var, c in run.memory.items():
                assert V.contains_concrete(final[var], c), (name, domain, var, c)
            for pos, outcomes in run.assert_outcomes.items():
                rec = verdicts[pos]
                assert rec.memory is not None, (name, pos)
                assert outcomes <= rec.result.values, (name, domain, pos, outcomes)
                if False in outcomes:
                    assert rec.verdict in ("DA", "PA")
