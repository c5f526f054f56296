"""
Telescopia Parsing
Eingabesprache: Ausdrucksbaum, Grammatik und Lowering
"""

from .ast import (
    Int, Rat, Var, Add, Sub, Mul, Div, Neg, Pow, PowBase, Factorial, Binomial,
    ExprAST, to_source, walk, contains_term_nodes,
)
from .grammar import parse_expr
from .lowering import lower_rational, lower_term, lower_expr

__all__ = [
    'Int', 'Rat', 'Var', 'Add', 'Sub', 'Mul', 'Div', 'Neg', 'Pow', 'PowBase',
    'Factorial', 'Binomial', 'ExprAST',
    'to_source',
    'walk',
    'contains_term_nodes',
    'parse_expr',
    'lower_rational',
    'lower_term',
    'lower_expr',
]
