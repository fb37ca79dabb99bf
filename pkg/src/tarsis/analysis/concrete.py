"""Concrete interpreter for IMP and the collecting evaluator built on it.

Unknown inputs come from an :class:`Inputs` object holding one queue per
intrinsic (``read`` strings, ``nondet`` booleans).  A queue repeats its last
element once drained; empty queues default to ``""`` and ``false``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from ..errors import (
    ConcreteError,
    ConcreteTypeError,
    DivisionByZero,
    OutOfFuel,
    SubstringOutOfRange,
    UnboundVariable,
)
from ..imp import ast as A

DEFAULT_FUEL = 1_000_000


class Inputs:
    def __init__(self, reads: Iterable[str] = (), nondets: Iterable[bool] = ()):
        self.reads = list(reads)
        self.nondets = list(nondets)
        self._r = 0
        self._n = 0

    def read(self) -> str:
        if not self.reads:
            return ""
        v = self.reads[min(self._r, len(self.reads) - 1)]
        self._r += 1
        return v

    def nondet(self) -> bool:
        if not self.nondets:
            return False
        v = self.nondets[min(self._n, len(self.nondets) - 1)]
        self._n += 1
        return v


# concrete string operations, end-exclusive substring

def c_substring(s: str, i: int, j: int) -> str:
    if not 0 <= i <= j <= len(s):
        raise SubstringOutOfRange(f"substring({s!r}, {i}, {j})")
    return s[i:j]


def c_index_of(s: str, t: str) -> int:
    return s.find(t)


def c_contains(s: str, t: str) -> bool:
    return t in s


def c_replace(s: str, search: str, repl: str) -> str:
    return s.replace(search, repl)


def c_length(s: str) -> int:
    return len(s)


def c_concat(s: str, t: str) -> str:
    return s + t


def _div(a: int, b: int) -> int:
    if b == 0:
        raise DivisionByZero("division by zero")
    q = abs(a) // abs(b)
    return q if (a >= 0) == (b > 0) else -q


def _kind(v):
    return bool if isinstance(v, bool) else type(v)


def _want(v, t, what):
    if _kind(v) is not t:
        raise ConcreteTypeError(f"{what}: expected {t.__name__}, got {v!r}")
    return v


def eval_expr(e, mem: dict, inputs: Inputs):
    if isinstance(e, A.Num):
        return e.value
    if isinstance(e, A.Str):
        return e.value
    if isinstance(e, A.BoolLit):
        return e.value
    if isinstance(e, A.Var):
        if e.name not in mem:
            raise UnboundVariable(e.name)
        return mem[e.name]
    if isinstance(e, A.Nondet):
        return inputs.nondet()
    if isinstance(e, A.Read):
        return inputs.read()
    if isinstance(e, A.Unary):
        v = eval_expr(e.operand, mem, inputs)
        if e.op == "!":
            return not _want(v, bool, "!")
        return -_want(v, int, "unary -")
    if isinstance(e, A.Binary):
        op = e.op
        if op in ("&&", "||"):
            a = _want(eval_expr(e.left, mem, inputs), bool, op)
            if (op == "&&" and not a) or (op == "||" and a):
                return a
            return _want(eval_expr(e.right, mem, inputs), bool, op)
        a = eval_expr(e.left, mem, inputs)
        b = eval_expr(e.right, mem, inputs)
        if op in ("==", "!="):
            if _kind(a) is not _kind(b):
                raise ConcreteTypeError(f"{op} on {a!r} and {b!r}")
            return (a == b) == (op == "==")
        if op == "+" and isinstance(a, str):
            return _want(a, str, "+") + _want(b, str, "+")
        a = _want(a, int, op)
        b = _want(b, int, op)
        if op == "+":
            return a + b
        if op == "-":
            return a - b
        if op == "*":
            return a * b
        if op == "/":
            return _div(a, b)
        if op == "<":
            return a < b
        if op == ">":
            return a > b
        if op == "<=":
            return a <= b
        if op == ">=":
            return a >= b
        raise ConcreteTypeError(f"unknown operator {op}")
    if isinstance(e, A.Call):
        args = [eval_expr(x, mem, inputs) for x in e.args]
        n = e.name
        if n == "length":
            return c_length(_want(args[0], str, n))
        if n == "indexOf":
            return c_index_of(_want(args[0], str, n), _want(args[1], str, n))
        if n == "contains":
            return c_contains(_want(args[0], str, n), _want(args[1], str, n))
        if n == "concat":
            return c_concat(_want(args[0], str, n), _want(args[1], str, n))
        if n == "replace":
            return c_replace(*(_want(a, str, n) for a in args))
        if n == "substring":
            return c_substring(_want(args[0], str, n), _want(args[1], int, n), _want(args[2], int, n))
    raise ConcreteTypeError(f"cannot evaluate {e!r}")


@dataclass
class ConcreteResult:
    memory: dict
    steps: int
    failed_asserts: list = field(default_factory=list)
    assert_outcomes: dict = field(default_factory=dict)


class _Runner:
    def __init__(self, inputs: Inputs, fuel: int):
        self.inputs = inputs
        self.fuel = fuel
        self.steps = 0
        self.failed: list = []
        self.outcomes: dict = {}

    def tick(self):
        self.steps += 1
        if self.steps > self.fuel:
            raise OutOfFuel(f"exceeded {self.fuel} steps")

    def run(self, s, mem):
        self.tick()
        if isinstance(s, A.Block):
            for x in s.body:
                self.run(x, mem)
        elif isinstance(s, A.Skip):
            pass
        elif isinstance(s, A.Assign):
            mem[s.name] = eval_expr(s.expr, mem, self.inputs)
        elif isinstance(s, A.If):
            c = _want(eval_expr(s.cond, mem, self.inputs), bool, "if")
            self.run(s.then if c else s.orelse, mem)
        elif isinstance(s, A.While):
            while _want(eval_expr(s.cond, mem, self.inputs), bool, "while"):
                self.run(s.body, mem)
                self.tick()
        elif isinstance(s, A.Assert):
            c = _want(eval_expr(s.cond, mem, self.inputs), bool, "assert")
            self.outcomes.setdefault(s.pos, set()).add(c)
            if not c:
                self.failed.append(s.pos)
        else:
            raise ConcreteTypeError(f"unknown statement {s!r}")


def concrete_run(program, m0: dict | None = None, fuel: int = DEFAULT_FUEL,
                 inputs: Inputs | None = None) -> ConcreteResult:
    """Execute ``program``; failing asserts are recorded, not fatal."""
    r = _Runner(inputs or Inputs(), fuel)
    mem = dict(m0 or {})
    r.run(program, mem)
    return ConcreteResult(mem, r.steps, r.failed, r.outcomes)


def collecting_eval(e, memories: Iterable[dict], inputs_factory=Inputs):
    """Union of concrete results of ``e`` over ``memories``.

    Returns ``(values, errored)``; memories that raise a runtime error add
    nothing to ``values`` and set ``errored``.
    """
    out = set()
    errored = False
    for m in memories:
        try:
            out.add(eval_expr(e, m, inputs_factory()))
        except ConcreteError:
            errored = True
    return out, errored
