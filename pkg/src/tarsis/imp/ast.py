"""IMP syntax trees.  Positions are ``(line, column)``, 1-based, and do not
take part in equality."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Tuple, Union

Pos = Tuple[int, int]
NOPOS: Pos = (0, 0)


# ----------------------------------------------------------- expressions


@dataclass(frozen=True)
class Num:
    value: int
    pos: Pos = field(default=NOPOS, compare=False)


@dataclass(frozen=True)
class Str:
    value: str
    pos: Pos = field(default=NOPOS, compare=False)


@dataclass(frozen=True)
class BoolLit:
    value: bool
    pos: Pos = field(default=NOPOS, compare=False)


@dataclass(frozen=True)
class Var:
    name: str
    pos: Pos = field(default=NOPOS, compare=False)


@dataclass(frozen=True)
class Nondet:
    """Unknown boolean."""

    pos: Pos = field(default=NOPOS, compare=False)


@dataclass(frozen=True)
class Read:
    """Unknown string."""

    pos: Pos = field(default=NOPOS, compare=False)


@dataclass(frozen=True)
class Unary:
    op: str  # "!" or "-"
    operand: "Expr"
    pos: Pos = field(default=NOPOS, compare=False)


@dataclass(frozen=True)
class Binary:
    op: str  # + - * / < > <= >= == != && ||
    left: "Expr"
    right: "Expr"
    pos: Pos = field(default=NOPOS, compare=False)


@dataclass(frozen=True)
class Call:
    name: str  # one of BUILTINS
    args: Tuple["Expr", ...]
    pos: Pos = field(default=NOPOS, compare=False)


Expr = Union[Num, Str, BoolLit, Var, Nondet, Read, Unary, Binary, Call]

# name -> arity
BUILTINS = {
    "length": 1,
    "indexOf": 2,
    "contains": 2,
    "substring": 3,
    "concat": 2,
    "replace": 3,
}


# ------------------------------------------------------------ statements


@dataclass(frozen=True)
class Skip:
    pos: Pos = field(default=NOPOS, compare=False)


@dataclass(frozen=True)
class Assign:
    name: str
    expr: Expr
    pos: Pos = field(default=NOPOS, compare=False)


@dataclass(frozen=True)
class Block:
    body: Tuple["Stmt", ...]
    pos: Pos = field(default=NOPOS, compare=False)


@dataclass(frozen=True)
class If:
    cond: Expr
    then: "Stmt"
    orelse: "Stmt"
    pos: Pos = field(default=NOPOS, compare=False)


@dataclass(frozen=True)
class While:
    cond: Expr
    body: "Stmt"
    pos: Pos = field(default=NOPOS, compare=False)


@dataclass(frozen=True)
class Assert:
    cond: Expr
    pos: Pos = field(default=NOPOS, compare=False)


Stmt = Union[Skip, Assign, Block, If, While, Assert]


def walk(node):
    """Pre-order traversal over statements and expressions."""
    yield node
    if isinstance(node, Block):
        for s in node.body:
            yield from walk(s)
    elif isinstance(node, Assign):
        yield from walk(node.expr)
    elif isinstance(node, If):
        yield from walk(node.cond)
        yield from walk(node.then)
        yield from walk(node.orelse)
    elif isinstance(node, While):
        yield from walk(node.cond)
        yield from walk(node.body)
    elif isinstance(node, Assert):
        yield from walk(node.cond)
    elif isinstance(node, Unary):
        yield from walk(node.operand)
    elif isinstance(node, Binary):
        yield from walk(node.left)
        yield from walk(node.right)
    elif isinstance(node, Call):
        for a in node.args:
            yield from walk(a)


def statements(node) -> list:
    """Every statement node except blocks, in source order."""
    return [n for n in walk(node) if isinstance(n, (Skip, Assign, If, While, Assert))]


def asserts(node) -> list:
    return [n for n in walk(node) if isinstance(n, Assert)]
