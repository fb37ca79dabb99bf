"""Text and JSON reports of an abstract run, one entry per assert."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..imp import ast as A
from ..imp.printer import expr_to_str
from .abstract import AbstractResult


@dataclass
class AssertEntry:
    line: int
    column: int
    condition: str
    verdict: str | None
    result: list
    reachable: bool
    values: dict = field(default_factory=dict)  # name -> pretty value


@dataclass
class Report:
    program: str
    domain: str
    entries: list
    timing_ms: float

    @property
    def definite(self) -> int:
        return sum(e.verdict == "DA" for e in self.entries)

    @property
    def possible(self) -> int:
        return sum(e.verdict == "PA" for e in self.entries)

    def to_json_obj(self, timing: bool = False) -> dict:
        out = {
            "program": self.program,
            "domain": self.domain,
            "asserts": [
                {
                    "line": e.line,
                    "column": e.column,
                    "condition": e.condition,
                    "verdict": e.verdict,
                    "result": e.result,
                    "reachable": e.reachable,
                    "values": e.values,
                }
                for e in self.entries
            ],
            "alarms": {"DA": self.definite, "PA": self.possible},
        }
        if timing:
            out["timingMs"] = round(self.timing_ms, 3)
        return out

    def to_json(self, timing: bool = False) -> str:
        # ensure_ascii writes ⊤ as \\u22a4
        return json.dumps(self.to_json_obj(timing), indent=2, ensure_ascii=True)

    def to_text(self, timing: bool = False) -> str:
        lines = [f"{self.program} [{self.domain}]"]
        for e in self.entries:
            verdict = e.verdict or "ok"
            if not e.reachable:
                verdict = "unreachable"
            where = f"{e.line}:{e.column}"
            lines.append(f"  {where:<7} {verdict:<11} assert({e.condition})")
            for name, v in e.values.items():
                lines.append(f"      {name} = {v}")
        lines.append(f"{len(self.entries)} asserts, {self.definite} DA, {self.possible} PA")
        if timing:
            lines.append(f"time: {self.timing_ms:.1f} ms")
        return "\n".join(lines)


def _cond_vars(cond) -> list:
    seen: list = []
    for n in A.walk(cond):
        if isinstance(n, A.Var) and n.name not in seen:
            seen.append(n.name)
    return seen


def build_report(result: AbstractResult, program: str = "<input>", domain: str = "tarsis") -> Report:
    V = result.values
    entries = []
    for rec in result.asserts:
        line, col = rec.node.pos
        values = {}
        if rec.memory is not None:
            for name in _cond_vars(rec.node.cond):
                if name in rec.memory:
                    values[name] = V.show(rec.memory[name])
        entries.append(AssertEntry(
            line, col, expr_to_str(rec.node.cond), rec.verdict,
            sorted(rec.result.values), rec.memory is not None, values,
        ))
    return Report(program, domain, entries, result.timing_ms)
