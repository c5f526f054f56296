"""
Telescopia - Grammatik
PLY-Lexer und -Parser der Eingabesprache

    expr    : expr (+|-) term | term
    term    : term (*|/) unary | unary
    unary   : - unary | power
    power   : postfix ^ exponent | postfix
    postfix : postfix ! | atom
    atom    : INTEGER | NAME | NAME(args) | (expr)

INTEGER/INTEGER ohne Leerzeichen wird nach der Reduktion zu einem Rat-Literal
zusammengefasst; 1/2/3 bleibt linksassoziativ (1/2)/3.
"""

from __future__ import annotations

import logging
import threading
from typing import Iterable

import ply.lex as lex
import ply.yacc as yacc

from ..errors import ParseError, UnknownIdentifierError
from .ast import (
    Add, Binomial, Div, ExprAST, Factorial, Int, Mul, Neg, Pow, PowBase, Rat, Sub, Var, walk,
)

logger = logging.getLogger(__name__)

FUNCTIONS = {'binomial': 2, 'factorial': 1}

tokens = (
    'INTEGER', 'NAME',
    'PLUS', 'MINUS', 'TIMES', 'DIVIDE', 'CARET', 'BANG',
    'LPAREN', 'RPAREN', 'COMMA',
)

# Tokens

t_PLUS = r'\+'
t_MINUS = r'-'
t_TIMES = r'\*'
t_DIVIDE = r'/'
t_CARET = r'\^'
t_BANG = r'!'
t_LPAREN = r'\('
t_RPAREN = r'\)'
t_COMMA = r','
t_NAME = r'[A-Za-z_][A-Za-z_0-9]*'

t_ignore = " \t\r"


def t_INTEGER(t):
    r'\d+'
    t.value = int(t.value)
    return t


def t_newline(t):
    r'\n+'
    t.lexer.lineno += len(t.value)


def t_error(t):
    line, column = _location(t.lexer.lexdata, t.lexpos)
    raise ParseError(f"illegal character {t.value[0]!r}", line, column)


# Parsing rules

def p_expr_binary(p):
    '''expr : expr PLUS term
            | expr MINUS term'''
    node = Add if p[2] == '+' else Sub
    p[0] = node(p[1], p[3], pos=p.lexpos(2))


def p_expr_term(p):
    'expr : term'
    p[0] = p[1]


def p_term_binary(p):
    '''term : term TIMES unary
            | term DIVIDE unary'''
    if p[2] == '/' and _is_rational_literal(p.lexer.lexdata, p[1], p.lexpos(2), p[3]):
        if p[3].value == 0:
            line, column = _location(p.lexer.lexdata, p[1].pos)
            raise ParseError("zero denominator in rational literal", line, column)
        p[0] = Rat(p[1].value, p[3].value, pos=p[1].pos)
        return
    node = Mul if p[2] == '*' else Div
    p[0] = node(p[1], p[3], pos=p.lexpos(2))


def _is_rational_literal(source: str, left, slash: int, right) -> bool:
    """p/q als zusammenhängender Text zweier INTEGER-Token (ohne Klammern, ohne Leerzeichen)."""
    if not (isinstance(left, Int) and isinstance(right, Int)):
        return False
    return source[left.pos:slash].isdigit() and right.pos == slash + 1


def p_term_unary(p):
    'term : unary'
    p[0] = p[1]


def p_unary_minus(p):
    'unary : MINUS unary'
    p[0] = Neg(p[2], pos=p.lexpos(1))


def p_unary_power(p):
    'unary : power'
    p[0] = p[1]


def p_power(p):
    'power : postfix CARET exponent'
    kind, value, pos = p[3]
    if kind == 'int':
        p[0] = Pow(p[1], value, pos=p.lexpos(2))
    else:
        p[0] = PowBase(p[1], value, pos=pos)


def p_power_postfix(p):
    'power : postfix'
    p[0] = p[1]


def p_exponent_integer(p):
    '''exponent : INTEGER
                | LPAREN INTEGER RPAREN'''
    if len(p) == 2:
        p[0] = ('int', p[1], p.lexpos(1))
    else:
        p[0] = ('int', p[2], p.lexpos(2))


def p_exponent_negative(p):
    '''exponent : MINUS INTEGER
                | LPAREN MINUS INTEGER RPAREN'''
    if len(p) == 3:
        p[0] = ('int', -p[2], p.lexpos(1))
    else:
        p[0] = ('int', -p[3], p.lexpos(2))


def p_exponent_name(p):
    'exponent : NAME'
    p[0] = ('name', p[1], p.lexpos(1))


def p_postfix_bang(p):
    'postfix : postfix BANG'
    p[0] = Factorial(p[1], pos=p.lexpos(2))


def p_postfix_atom(p):
    'postfix : atom'
    p[0] = p[1]


def p_atom_integer(p):
    'atom : INTEGER'
    p[0] = Int(p[1], pos=p.lexpos(1))


def p_atom_name(p):
    'atom : NAME'
    p[0] = Var(p[1], pos=p.lexpos(1))


def p_atom_call(p):
    'atom : NAME LPAREN arguments RPAREN'
    name, args, pos = p[1], p[3], p.lexpos(1)
    line, column = _location(p.lexer.lexdata, pos)
    if name not in FUNCTIONS:
        raise UnknownIdentifierError(f"unknown function '{name}'", line, column)
    if len(args) != FUNCTIONS[name]:
        raise ParseError(f"{name} expects {FUNCTIONS[name]} argument(s), got {len(args)}", line, column)
    p[0] = Binomial(args[0], args[1], pos=pos) if name == 'binomial' else Factorial(args[0], pos=pos)


def p_atom_group(p):
    'atom : LPAREN expr RPAREN'
    p[0] = p[2]


def p_arguments(p):
    '''arguments : expr
                 | arguments COMMA expr'''
    p[0] = [p[1]] if len(p) == 2 else p[1] + [p[3]]


def p_error(p):
    if p is None:
        raise ParseError("unexpected end of input", *_end_location())
    line, column = _location(p.lexer.lexdata, p.lexpos)
    raise ParseError(f"unexpected token {p.value!r}", line, column)


def _location(source: str, pos: int):
    """1-basierte (Zeile, Spalte) einer Zeichenposition."""
    line = source.count("\n", 0, pos) + 1
    column = pos - (source.rfind("\n", 0, pos) + 1) + 1
    return line, column


_state = threading.local()


def _end_location():
    source = getattr(_state, 'source', "")
    return _location(source, len(source))


def _build():
    lexer = lex.lex()
    parser = yacc.yacc(debug=False, write_tables=False, errorlog=yacc.NullLogger())
    return lexer, parser


_lexer, _parser = _build()
_lock = threading.Lock()


def parse_expr(source: str, variables: Iterable[str]) -> ExprAST:
    """
    Parst einen Ausdruck; Bezeichner müssen deklarierte Variablen sein.

    Raises:
        ParseError: Syntaxfehler mit Zeile/Spalte
        UnknownIdentifierError: nicht deklarierter Bezeichner
    """
    declared = set(variables)
    with _lock:
        _state.source = source
        lexer = _lexer.clone()
        lexer.lineno = 1
        tree = _parser.parse(source, lexer=lexer)
    if tree is None:
        raise ParseError("empty expression", 1, 1)
    for node in walk(tree):
        name = node.name if isinstance(node, Var) else node.exponent if isinstance(node, PowBase) else None
        if name is not None and name not in declared:
            line, column = _location(source, node.pos)
            raise UnknownIdentifierError(f"unknown identifier '{name}'", line, column)
    logger.debug("parsed %r", source)
    return tree


__all__ = ['parse_expr', 'FUNCTIONS']
