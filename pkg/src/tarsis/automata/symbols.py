"""Transition labels.

A symbol is either a non-empty Python ``str`` (a whole string read in one
step) or the :data:`TOP` marker standing for any string at all.  Epsilon
transitions use :data:`EPS`, which is ``None``.
"""

from __future__ import annotations

# Stands for "some character that no label mentions" in character-level
# encodings.  Private-use code point so it never collides with source text.
FRESH = "\ue000"

EPS = None


class _Top:
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "⊤"

    def __reduce__(self):
        return (_Top, ())


TOP = _Top()


def sym_key(sym):
    """Total order on labels: epsilon, then TOP, then strings."""
    if sym is None:
        return (0, "")
    if sym is TOP:
        return (1, "")
    if type(sym) is str and sym:
        return (2, sym)
    raise TypeError(f"not a transition label: {sym!r}")


def is_symbol(x) -> bool:
    return x is TOP or (isinstance(x, str) and len(x) > 0)


def sym_len(sym) -> int:
    """Contribution of a label to the minimum length of a path."""
    if sym is TOP or sym is None:
        return 0
    return len(sym)


def show(sym) -> str:
    if sym is None:
        return "ε"
    if sym is TOP:
        return "⊤"
    return sym.replace(FRESH, "?")
