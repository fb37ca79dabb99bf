"""Program alphabet: string constants and everything they can be cut into."""

from __future__ import annotations

from dataclasses import dataclass

from ..automata.symbols import TOP
from . import ast as A


@dataclass(frozen=True)
class ProgramAlphabet:
    literals: frozenset
    chars: frozenset

    def accepts(self, sym) -> bool:
        """``sym`` is ⊤ or a non-empty substring of some literal."""
        if sym is TOP:
            return True
        return isinstance(sym, str) and sym != "" and any(sym in lit for lit in self.literals)

    def symbols(self) -> set:
        out = {TOP}
        for lit in self.literals:
            for i in range(len(lit)):
                for j in range(i + 1, len(lit) + 1):
                    out.add(lit[i:j])
        return out


def extract_alphabet(program) -> ProgramAlphabet:
    lits = frozenset(n.value for n in A.walk(program) if isinstance(n, A.Str))
    return ProgramAlphabet(lits, frozenset(c for s in lits for c in s))
