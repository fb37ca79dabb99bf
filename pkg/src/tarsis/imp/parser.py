"""Recursive-descent parser for IMP.

    program   := stmt* EOF
    stmt      := ID "=" expr ";" | "skip" ";" | "assert" "(" expr ")" ";"
               | "if" "(" expr ")" body ["else" body]
               | "while" "(" expr ")" body
               | block [";"]
    body      := block [";"] | stmt
    block     := "{" stmt* "}"
    expr      := and ("||" and)*
    and       := cmp ("&&" cmp)*
    cmp       := add [("<" | ">" | "<=" | ">=" | "==" | "!=") add]
    add       := mul (("+" | "-") mul)*
    mul       := unary (("*" | "/") unary)*
    unary     := ("!" | "-") unary | primary
    primary   := INT | STRING | "true" | "false" | "nondet" | "read" "(" ")"
               | BUILTIN "(" args ")" | ID | "(" expr ")"
"""

from __future__ import annotations

from . import ast as A
from .lexer import ImpSyntaxError, Token, tokenize

COMPARISONS = ("<", ">", "<=", ">=", "==", "!=")
STMT_START = {"ID", "skip", "assert", "if", "while", "{"}


class Parser:
    def __init__(self, src: str):
        self.toks = tokenize(src)
        self.i = 0

    # -- token helpers

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def _is(self, text) -> bool:
        t = self.tok
        return t.kind in ("OP", "KW") and t.text == text

    def _next(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def _fail(self, expected, what=None):
        t = self.tok
        found = "end of input" if t.kind == "EOF" else repr(t.text)
        raise ImpSyntaxError(what or f"unexpected {found}", t.line, t.col, expected)

    def _expect(self, text) -> Token:
        if not self._is(text):
            self._fail({text})
        return self._next()

    # -- statements

    def program(self) -> A.Block:
        stmts = []
        while self.tok.kind != "EOF":
            stmts.append(self.stmt())
        return A.Block(tuple(stmts), (1, 1))

    def stmt(self):
        t = self.tok
        pos = (t.line, t.col)
        if t.kind == "ID":
            name = self._next().text
            self._expect("=")
            e = self.expr()
            self._expect(";")
            return A.Assign(name, e, pos)
        if self._is("skip"):
            self._next()
            self._expect(";")
            return A.Skip(pos)
        if self._is("assert"):
            self._next()
            self._expect("(")
            e = self.expr()
            self._expect(")")
            self._expect(";")
            return A.Assert(e, pos)
        if self._is("if"):
            self._next()
            self._expect("(")
            c = self.expr()
            self._expect(")")
            then = self.body()
            orelse = A.Skip(pos)
            if self._is("else"):
                self._next()
                orelse = self.body()
            return A.If(c, then, orelse, pos)
        if self._is("while"):
            self._next()
            self._expect("(")
            c = self.expr()
            self._expect(")")
            return A.While(c, self.body(), pos)
        if self._is("{"):
            b = self.block()
            if self._is(";"):
                self._next()
            return b
        self._fail(STMT_START, None)

    def block(self) -> A.Block:
        t = self._expect("{")
        stmts = []
        while not self._is("}"):
            if self.tok.kind == "EOF":
                self._fail(STMT_START | {"}"})
            stmts.append(self.stmt())
        self._next()
        return A.Block(tuple(stmts), (t.line, t.col))

    def body(self):
        if self._is("{"):
            b = self.block()
            if self._is(";"):
                self._next()
            return b
        return self.stmt()

    # -- expressions

    def expr(self):
        left = self.conj()
        while self._is("||"):
            t = self._next()
            left = A.Binary("||", left, self.conj(), (t.line, t.col))
        return left

    def conj(self):
        left = self.cmp()
        while self._is("&&"):
            t = self._next()
            left = A.Binary("&&", left, self.cmp(), (t.line, t.col))
        return left

    def cmp(self):
        left = self.add()
        if self.tok.kind == "OP" and self.tok.text in COMPARISONS:
            t = self._next()
            left = A.Binary(t.text, left, self.add(), (t.line, t.col))
        return left

    def add(self):
        left = self.mul()
        while self._is("+") or self._is("-"):
            t = self._next()
            left = A.Binary(t.text, left, self.mul(), (t.line, t.col))
        return left

    def mul(self):
        left = self.unary()
        while self._is("*") or self._is("/"):
            t = self._next()
            left = A.Binary(t.text, left, self.unary(), (t.line, t.col))
        return left

    def unary(self):
        if self._is("!") or self._is("-"):
            t = self._next()
            operand = self.unary()
            if t.text == "-" and isinstance(operand, A.Num):
                return A.Num(-operand.value, (t.line, t.col))
            return A.Unary(t.text, operand, (t.line, t.col))
        return self.primary()

    def primary(self):
        t = self.tok
        pos = (t.line, t.col)
        if t.kind == "INT":
            self._next()
            return A.Num(t.value, pos)
        if t.kind == "STRING":
            self._next()
            return A.Str(t.value, pos)
        if self._is("true") or self._is("false"):
            self._next()
            return A.BoolLit(t.text == "true", pos)
        if self._is("nondet"):
            self._next()
            return A.Nondet(pos)
        if self._is("("):
            self._next()
            e = self.expr()
            self._expect(")")
            return e
        if t.kind == "ID":
            self._next()
            if not self._is("("):
                return A.Var(t.text, pos)
            self._next()
            if t.text == "read":
                self._expect(")")
                return A.Read(pos)
            arity = A.BUILTINS.get(t.text)
            if arity is None:
                raise ImpSyntaxError(
                    f"unknown function {t.text!r}", t.line, t.col, set(A.BUILTINS) | {"read"}
                )
            args = [self.expr()]
            while self._is(","):
                self._next()
                args.append(self.expr())
            if len(args) != arity:
                raise ImpSyntaxError(
                    f"{t.text} takes {arity} argument(s), got {len(args)}", t.line, t.col
                )
            self._expect(")")
            return A.Call(t.text, tuple(args), pos)
        self._fail({"INT", "STRING", "ID", "true", "false", "nondet", "(", "!", "-"})


def parse(src: str) -> A.Block:
    return Parser(src).program()


def parse_expr(src: str):
    p = Parser(src)
    e = p.expr()
    if p.tok.kind != "EOF":
        p._fail({"EOF"})
    return e
