"""Pretty printer producing source that parses back to the same tree."""

from __future__ import annotations

from . import ast as A

PREC = {"||": 1, "&&": 2, "<": 3, ">": 3, "<=": 3, ">=": 3, "==": 3, "!=": 3,
        "+": 4, "-": 4, "*": 5, "/": 5}


def quote(s: str) -> str:
    out = s.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n").replace("\t", "\\t")
    return f'"{out}"'


def expr_to_str(e, ctx: int = 0) -> str:
    if isinstance(e, A.Num):
        return str(e.value)
    if isinstance(e, A.Str):
        return quote(e.value)
    if isinstance(e, A.BoolLit):
        return "true" if e.value else "false"
    if isinstance(e, A.Var):
        return e.name
    if isinstance(e, A.Nondet):
        return "nondet"
    if isinstance(e, A.Read):
        return "read()"
    if isinstance(e, A.Unary):
        inner = expr_to_str(e.operand, 6)
        return f"{e.op}{inner}"
    if isinstance(e, A.Call):
        return f"{e.name}({', '.join(expr_to_str(a) for a in e.args)})"
    if isinstance(e, A.Binary):
        p = PREC[e.op]
        # comparisons do not chain; left-assoc elsewhere
        left = expr_to_str(e.left, p + 1 if p == 3 else p)
        right = expr_to_str(e.right, p + 1)
        s = f"{left} {e.op} {right}"
        return f"({s})" if p < ctx else s
    raise TypeError(f"not an expression: {e!r}")


def to_source(program: A.Block) -> str:
    """Source text of a whole program."""
    return "".join(stmt_to_str(x, 0) for x in program.body)


def stmt_to_str(s, indent: int = 0) -> str:
    pad = "    " * indent
    if isinstance(s, A.Block):
        inner = "".join(stmt_to_str(x, indent + 1) for x in s.body)
        return f"{pad}{{\n{inner}{pad}}}\n"
    if isinstance(s, A.Skip):
        return f"{pad}skip;\n"
    if isinstance(s, A.Assign):
        return f"{pad}{s.name} = {expr_to_str(s.expr)};\n"
    if isinstance(s, A.Assert):
        return f"{pad}assert({expr_to_str(s.cond)});\n"
    if isinstance(s, A.If):
        out = f"{pad}if ({expr_to_str(s.cond)})" + _body(s.then, indent)
        out += f"{pad}else" + _body(s.orelse, indent)
        return out
    if isinstance(s, A.While):
        return f"{pad}while ({expr_to_str(s.cond)})" + _body(s.body, indent)
    raise TypeError(f"not a statement: {s!r}")


def _body(s, indent):
    if isinstance(s, A.Block):
        inner = "".join(stmt_to_str(x, indent + 1) for x in s.body)
        return " {\n" + inner + "    " * indent + "}\n"
    return "\n" + stmt_to_str(s, indent + 1)
