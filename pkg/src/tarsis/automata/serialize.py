"""Debug output: Graphviz dot, JSON and a one-line text form."""

from __future__ import annotations

import json

from .core import Automaton
from .symbols import EPS, TOP, show

TOP_LABEL = "⊤"


def _label(sym):
    if sym is TOP:
        return TOP_LABEL
    if sym is EPS:
        return ""
    return sym


def to_json_obj(a: Automaton) -> dict:
    return {
        "states": list(range(a.n)),
        "initial": a.initial,
        "finals": sorted(a.finals),
        "transitions": [
            {"from": s, "label": _label(sym), "to": d} for s, sym, d in a.transitions
        ],
    }


def to_json(a: Automaton) -> str:
    # ⊤ is written as the escape \u22a4
    return json.dumps(to_json_obj(a), ensure_ascii=True)


def from_json_obj(obj: dict) -> Automaton:
    states = list(obj["states"])
    index = {q: i for i, q in enumerate(states)}
    trans = []
    for t in obj["transitions"]:
        lab = t["label"]
        sym = TOP if lab == TOP_LABEL else (EPS if lab == "" else lab)
        trans.append((index[t["from"]], sym, index[t["to"]]))
    return Automaton(len(states), index[obj["initial"]], [index[f] for f in obj["finals"]], trans)


def to_dot(a: Automaton, name: str = "A") -> str:
    lines = [f"digraph {name} {{", "  rankdir=LR;", '  start [shape=point];']
    for q in range(a.n):
        shape = "doublecircle" if q in a.finals else "circle"
        lines.append(f"  q{q} [shape={shape}];")
    lines.append(f"  start -> q{a.initial};")
    for s, sym, d in a.transitions:
        lab = json.dumps(show(sym), ensure_ascii=False)
        lines.append(f"  q{s} -> q{d} [label={lab}];")
    lines.append("}")
    return "\n".join(lines)


def to_text(a: Automaton) -> str:
    edges = ", ".join(f"{s}-{show(sym)!r}->{d}" for s, sym, d in a.transitions)
    return f"init={a.initial} finals={sorted(a.finals)} [{edges}]"
