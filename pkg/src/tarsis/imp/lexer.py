"""Tokenizer for IMP."""

from __future__ import annotations

from typing import NamedTuple

from ..errors import TarsisError

KEYWORDS = {"if", "else", "while", "assert", "skip", "true", "false", "nondet"}

# longest first
OPERATORS = [
    "&&", "||", "==", "!=", "<=", ">=",
    "+", "-", "*", "/", "<", ">", "!", "=", "(", ")", "{", "}", ",", ";",
]

ESCAPES = {'"': '"', "\\": "\\", "n": "\n", "t": "\t"}


class ImpSyntaxError(TarsisError):
    def __init__(self, message, line, col, expected=()):
        self.line = line
        self.col = col
        self.expected = frozenset(expected)
        detail = f" (expected one of: {', '.join(sorted(self.expected))})" if self.expected else ""
        super().__init__(f"{line}:{col}: {message}{detail}")


class Token(NamedTuple):
    kind: str  # INT, STRING, ID, KW, OP, EOF
    text: str
    value: object
    line: int
    col: int


def tokenize(src: str) -> list:
    toks = []
    i, line, col = 0, 1, 1
    n = len(src)

    def advance(k):
        nonlocal i, line, col
        for _ in range(k):
            if src[i] == "\n":
                line += 1
                col = 1
            else:
                col += 1
            i += 1

    while i < n:
        c = src[i]
        if c in " \t\r\n":
            advance(1)
            continue
        if src.startswith("//", i):
            while i < n and src[i] != "\n":
                advance(1)
            continue
        if src.startswith("/*", i):
            end = src.find("*/", i + 2)
            if end < 0:
                raise ImpSyntaxError("unterminated comment", line, col)
            advance(end + 2 - i)
            continue
        start_line, start_col = line, col
        if c.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            text = src[i:j]
            toks.append(Token("INT", text, int(text), start_line, start_col))
            advance(j - i)
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            text = src[i:j]
            kind = "KW" if text in KEYWORDS else "ID"
            toks.append(Token(kind, text, text, start_line, start_col))
            advance(j - i)
            continue
        if c == '"':
            j = i + 1
            buf = []
            while True:
                if j >= n or src[j] == "\n":
                    raise ImpSyntaxError("unterminated string literal", start_line, start_col)
                ch = src[j]
                if ch == '"':
                    break
                if ch == "\\":
                    esc = src[j + 1] if j + 1 < n else ""
                    if esc not in ESCAPES:
                        raise ImpSyntaxError(f"bad escape \\{esc}", line, col + (j - i))
                    buf.append(ESCAPES[esc])
                    j += 2
                    continue
                buf.append(ch)
                j += 1
            toks.append(Token("STRING", src[i:j + 1], "".join(buf), start_line, start_col))
            advance(j + 1 - i)
            continue
        for op in OPERATORS:
            if src.startswith(op, i):
                toks.append(Token("OP", op, op, start_line, start_col))
                advance(len(op))
                break
        else:
            raise ImpSyntaxError(f"unexpected character {c!r}", line, col)
    toks.append(Token("EOF", "", None, line, col))
    return toks
