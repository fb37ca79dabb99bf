from ._backend import BACKEND
from .core import (
    Automaton,
    CharDFA,
    char_dfa,
    chars,
    concat,
    determinize_minimize,
    empty,
    enumerate_paths,
    epsilon,
    equivalent,
    factor_automaton,
    flatten,
    from_strings,
    from_symbol_strings,
    has_cycle,
    intersect_empty,
    is_single_path,
    length_bounds,
    leq,
    literal,
    lub,
    member,
    minimize,
    quotient,
    reads_top,
    split_chars,
    star,
    strings,
    symbol_strings,
    top,
)
from .serialize import to_dot, to_json
from .symbols import EPS, FRESH, TOP, sym_key
from .widening import widen

__all__ = [
    "BACKEND", "Automaton", "CharDFA", "EPS", "FRESH", "TOP", "char_dfa", "chars",
    "concat", "determinize_minimize", "empty", "enumerate_paths", "epsilon",
    "equivalent", "factor_automaton", "flatten", "from_strings",
    "from_symbol_strings", "has_cycle", "intersect_empty", "is_single_path",
    "length_bounds", "leq", "literal", "lub", "member", "minimize", "quotient",
    "reads_top", "split_chars", "star", "strings", "sym_key", "symbol_strings",
    "to_dot", "to_json", "top", "widen",
]
