from . import ast
from .alphabet import ProgramAlphabet, extract_alphabet
from .lexer import ImpSyntaxError, tokenize
from .parser import parse, parse_expr
from .printer import expr_to_str, to_source

__all__ = [
    "ImpSyntaxError", "ProgramAlphabet", "ast", "expr_to_str",
    "extract_alphabet", "parse", "parse_expr", "to_source", "tokenize",
]
