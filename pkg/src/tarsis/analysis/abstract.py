"""Abstract interpreter for IMP with trace partitioning.

The abstract state is a list of ``(token, memory)`` traces.  A token is the
tuple of branch decisions taken so far, at most ``partition_bound`` long;
traces with equal tokens are joined.

Loops are handled per trace first: while the guard is exactly ``{true}``
the body is unrolled, up to ``partition_bound`` iterations, and a trace
whose guard becomes ``{false}`` leaves the loop tagged with its iteration
count.  Every other trace is joined into one memory that is iterated to a
post-fixpoint with widening at the loop head.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from ..errors import BottomInput, Diverged
from ..imp import ast as A
from ..imp.alphabet import extract_alphabet
from ..values.booleans import BOTH, BoolSet
from ..values.coalesced import BOOL, BOTTOM, INT, STR, TOP_VALUE, TOPK, AbstractValue, Values
from ..values.intervals import Interval
from ..values.string_domains import make_domain
from .config import AnalysisConfig

Memory = dict  # name -> AbstractValue


@dataclass
class AssertRecord:
    node: A.Assert
    result: BoolSet = field(default_factory=BoolSet.bottom)
    memory: Memory | None = None

    @property
    def verdict(self) -> str | None:
        if self.result.values == frozenset({False}):
            return "DA"
        if self.result.values == frozenset({True, False}):
            return "PA"
        return None


@dataclass
class AbstractResult:
    final: list  # [(token, memory)]
    asserts: list  # [AssertRecord] in source order
    timing_ms: float
    values: Values

    def final_memory(self) -> Memory:
        out: Memory = {}
        for _, m in self.final:
            out = _lub_mem(self.values, out, m)
        return out

    @property
    def alarms(self) -> list:
        return [(r.node.pos, r.verdict) for r in self.asserts if r.verdict]


def _lub_mem(V: Values, a: Memory, b: Memory) -> Memory:
    out = dict(a)
    for k, v in b.items():
        out[k] = V.lub(out[k], v) if k in out else v
    return out


class AbstractInterpreter:
    def __init__(self, program: A.Block, config: AnalysisConfig = AnalysisConfig()):
        self.program = program
        self.config = config
        alphabet = extract_alphabet(program).chars
        self.strings = make_domain(config.domain, alphabet, config.widening_n, config.tau)
        self.V = Values(self.strings)
        self.K = config.partition_bound
        self.records = {id(a): AssertRecord(a) for a in A.asserts(program)}

    # ------------------------------------------------------------ values

    def _as_str(self, v):
        if v.kind == STR:
            return v.val
        if v.kind == TOPK:
            return self.strings.top()
        return None

    @staticmethod
    def _as_int(v):
        if v.kind == INT:
            return v.val
        if v.kind == TOPK:
            return Interval.top()
        return None

    @staticmethod
    def _as_bool(v):
        if v.kind == BOOL:
            return v.val
        if v.kind == TOPK:
            return BOTH
        return None

    def eval(self, e, m: Memory) -> AbstractValue:
        try:
            return self._eval(e, m)
        except BottomInput:
            return BOTTOM

    def _eval(self, e, m):
        V, S = self.V, self.strings
        if isinstance(e, A.Num):
            return V.of_int(Interval.of(e.value))
        if isinstance(e, A.Str):
            return V.of_str(S.literal(e.value))
        if isinstance(e, A.BoolLit):
            return V.of_bool(BoolSet.of(e.value))
        if isinstance(e, A.Var):
            return m.get(e.name, BOTTOM)
        if isinstance(e, A.Nondet):
            return V.of_bool(BOTH)
        if isinstance(e, A.Read):
            return V.of_str(S.unknown())
        if isinstance(e, A.Unary):
            v = self._eval(e.operand, m)
            if v.is_bottom():
                return BOTTOM
            if e.op == "!":
                b = self._as_bool(v)
                return BOTTOM if b is None else V.of_bool(b.negate())
            i = self._as_int(v)
            return BOTTOM if i is None else V.of_int(-i)
        if isinstance(e, A.Binary):
            return self._binary(e, m)
        if isinstance(e, A.Call):
            return self._call(e, m)
        raise TypeError(f"cannot evaluate {e!r}")

    def _binary(self, e, m):
        V, S = self.V, self.strings
        a = self._eval(e.left, m)
        b = self._eval(e.right, m)
        if a.is_bottom() or b.is_bottom():
            return BOTTOM
        op = e.op
        if op in ("&&", "||"):
            x, y = self._as_bool(a), self._as_bool(b)
            if x is None or y is None:
                return BOTTOM
            if op == "&&":
                # short circuit: a false left operand never looks right
                out = BoolSet.of(False) if False in x else BoolSet.bottom()
                if True in x:
                    out = out.lub(y)
                return V.of_bool(out)
            out = BoolSet.of(True) if True in x else BoolSet.bottom()
            if False in x:
                out = out.lub(y)
            return V.of_bool(out)
        if op in ("==", "!="):
            r = self._equals(a, b)
            if r is None:
                return BOTTOM
            return V.of_bool(r if op == "==" else r.negate())
        if op == "+" and TOPK in (a.kind, b.kind):
            return TOP_VALUE
        if op == "+" and a.kind == STR:
            if b.kind != STR:
                return BOTTOM
            return V.of_str(S.concat(a.val, b.val))
        x, y = self._as_int(a), self._as_int(b)
        if x is None or y is None:
            return BOTTOM
        if op == "+":
            return V.of_int(x + y)
        if op == "-":
            return V.of_int(x - y)
        if op == "*":
            return V.of_int(x * y)
        if op == "/":
            return V.of_int(x / y)
        if op == "<":
            return V.of_bool(x.lt(y))
        if op == ">":
            return V.of_bool(y.lt(x))
        if op == "<=":
            return V.of_bool(y.lt(x).negate())
        if op == ">=":
            return V.of_bool(x.lt(y).negate())
        raise TypeError(f"unknown operator {op}")

    def _equals(self, a, b):
        if TOPK in (a.kind, b.kind):
            return BOTH
        if a.kind != b.kind:
            return None
        if a.kind == INT:
            return a.val.eq(b.val)
        if a.kind == STR:
            return self.strings.equals(a.val, b.val)
        x, y = a.val.values, b.val.values
        if len(x) == 1 and len(y) == 1:
            return BoolSet.of(x == y)
        return BOTH

    def _call(self, e, m):
        V, S = self.V, self.strings
        args = [self._eval(x, m) for x in e.args]
        if any(a.is_bottom() for a in args):
            return BOTTOM
        n = e.name
        if n == "substring":
            s, i, j = self._as_str(args[0]), self._as_int(args[1]), self._as_int(args[2])
            if s is None or i is None or j is None:
                return BOTTOM
            return V.of_str(S.substring(s, i, j))
        strs = [self._as_str(a) for a in args]
        if any(s is None for s in strs):
            return BOTTOM
        if n == "length":
            return V.of_int(S.length(strs[0]))
        if n == "indexOf":
            return V.of_int(S.index_of(*strs))
        if n == "contains":
            return V.of_bool(S.contains(*strs))
        if n == "concat":
            return V.of_str(S.concat(*strs))
        if n == "replace":
            return V.of_str(S.replace(*strs))
        raise TypeError(f"unknown builtin {n}")

    def guard(self, e, m) -> BoolSet:
        b = self._as_bool(self.eval(e, m))
        return BoolSet.bottom() if b is None else b

    # ------------------------------------------------------------ traces

    def _extend(self, token, item):
        return token + (item,) if len(token) < self.K else token

    def _merge(self, traces):
        out: dict = {}
        for tok, m in traces:
            out[tok] = _lub_mem(self.V, out[tok], m) if tok in out else m
        return list(out.items())

    def _mem_stable(self, a: Memory, b: Memory) -> bool:
        stable = getattr(self.strings, "stable", self.strings.leq)
        for k, v in a.items():
            w = b.get(k, BOTTOM)
            if v.kind == STR and w.kind == STR:
                if not stable(v.val, w.val):
                    return False
            elif not self.V.leq(v, w):
                return False
        return True

    def _mem_widen(self, a: Memory, b: Memory, stage: int) -> Memory:
        S = self.strings
        if stage == 0:
            sw = S.widen
        elif stage == 1:
            sw = getattr(S, "widen_untimed", S.widen)
        else:
            def sw(x, y):
                return S.top()
        out = dict(a)
        for k, v in b.items():
            out[k] = self.V.widen(out[k], v, sw) if k in out else v
        return out

    # -------------------------------------------------------- statements

    def run(self):
        t0 = time.perf_counter()
        final = self.exec(self.program, [((), {})])
        ms = (time.perf_counter() - t0) * 1000.0
        records = [self.records[id(a)] for a in A.asserts(self.program)]
        return AbstractResult(final, records, ms, self.V)

    def exec(self, s, traces: list) -> list:
        if not traces:
            return traces
        if isinstance(s, A.Block):
            for x in s.body:
                traces = self.exec(x, traces)
            return traces
        if isinstance(s, A.Skip):
            return traces
        if isinstance(s, A.Assign):
            out = []
            for tok, m in traces:
                v = self.eval(s.expr, m)
                if not v.is_bottom():
                    m2 = dict(m)
                    m2[s.name] = v
                    out.append((tok, m2))
            return out
        if isinstance(s, A.Assert):
            rec = self.records[id(s)]
            for tok, m in traces:
                rec.result = rec.result.lub(self.guard(s.cond, m))
                rec.memory = m if rec.memory is None else _lub_mem(self.V, rec.memory, m)
            return traces
        if isinstance(s, A.If):
            then_in, else_in = [], []
            for tok, m in traces:
                g = self.guard(s.cond, m)
                if True in g:
                    then_in.append((self._extend(tok, (s.pos, "T")), m))
                if False in g:
                    else_in.append((self._extend(tok, (s.pos, "F")), m))
            out = self.exec(s.then, self._merge(then_in))
            out += self.exec(s.orelse, self._merge(else_in))
            return self._merge(out)
        if isinstance(s, A.While):
            return self._loop(s, traces)
        raise TypeError(f"unknown statement {s!r}")

    def _loop(self, s: A.While, traces: list) -> list:
        exits = []
        pool = []
        # (token, memory, iterations so far)
        work = [(tok, m, 0) for tok, m in traces]
        while work:
            nxt = []
            for tok, m, k in work:
                g = self.guard(s.cond, m)
                if g.values == frozenset({False}):
                    exits.append((self._extend(tok, (s.pos, k)), m))
                elif g.values == frozenset({True}) and k < self.K:
                    for tok2, m2 in self.exec(s.body, [(tok, m)]):
                        nxt.append((tok2, m2, k + 1))
                elif g.values:
                    pool.append((tok, m))
            # join unrolled traces that agree on token and iteration count
            grouped: dict = {}
            for tok, m, k in nxt:
                key = (tok, k)
                grouped[key] = _lub_mem(self.V, grouped[key], m) if key in grouped else m
            work = [(tok, m, k) for (tok, k), m in grouped.items()]
        if pool:
            exits.extend(self._fixpoint(s, pool))
        return self._merge(exits)

    def _fixpoint(self, s: A.While, pool: list) -> list:
        tok = _common_prefix([t for t, _ in pool])
        tok = self._extend(tok, (s.pos, "*"))
        entry: Memory = {}
        for _, m in pool:
            entry = _lub_mem(self.V, entry, m)
        head = entry
        cfg = self.config
        for it in range(cfg.max_iterations):
            body_out: Memory = {}
            if True in self.guard(s.cond, head):
                for _, m in self.exec(s.body, [(tok, head)]):
                    body_out = _lub_mem(self.V, body_out, m)
            target = _lub_mem(self.V, entry, body_out)
            if self._mem_stable(target, head):
                break
            stage = 0 if it < cfg.patience else (1 if it < cfg.give_up_strings else 2)
            head = self._mem_widen(head, _lub_mem(self.V, head, target), stage)
        else:
            raise Diverged(f"loop at {s.pos} did not stabilize in {cfg.max_iterations} iterations")
        if False in self.guard(s.cond, head):
            return [(tok, head)]
        return []


def _common_prefix(tokens: list) -> tuple:
    if not tokens:
        return ()
    first = tokens[0]
    n = len(first)
    for t in tokens[1:]:
        i = 0
        while i < min(n, len(t)) and first[i] == t[i]:
            i += 1
        n = i
    return first[:n]


def abstract_run(program: A.Block, config: AnalysisConfig = AnalysisConfig()) -> AbstractResult:
    return AbstractInterpreter(program, config).run()
