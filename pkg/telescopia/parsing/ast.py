"""
Telescopia - Ausdrucksbaum
Knoten der Eingabesprache und Rückübersetzung in Quelltext
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Tuple, Union


@dataclass(frozen=True)
class Int:
    value: int
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class Rat:
    """Rationales Literal p/q."""

    num: int
    den: int
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class Var:
    name: str
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class Add:
    left: "ExprAST"
    right: "ExprAST"
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class Sub:
    left: "ExprAST"
    right: "ExprAST"
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class Mul:
    left: "ExprAST"
    right: "ExprAST"
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class Div:
    left: "ExprAST"
    right: "ExprAST"
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class Neg:
    operand: "ExprAST"
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class Pow:
    """Potenz mit ganzzahligem Exponenten."""

    base: "ExprAST"
    exponent: int
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class PowBase:
    """Konstante Basis hoch Summationsvariable, z.B. 2^k."""

    base: "ExprAST"
    exponent: str
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class Factorial:
    argument: "ExprAST"
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class Binomial:
    top: "ExprAST"
    bottom: "ExprAST"
    pos: int = field(default=-1, compare=False)


ExprAST = Union[Int, Rat, Var, Add, Sub, Mul, Div, Neg, Pow, PowBase, Factorial, Binomial]

# Bindungsstärke für das Setzen von Klammern
_PRECEDENCE = {
    Add: 1, Sub: 1,
    Mul: 2, Div: 2, Rat: 2,
    Neg: 3,
    Pow: 4, PowBase: 4,
    Factorial: 5,
    Int: 6, Var: 6, Binomial: 6,
}


def _prec(node: ExprAST) -> int:
    return _PRECEDENCE[type(node)]


def _wrap(node: ExprAST, minimum: int) -> str:
    text = to_source(node)
    return f"({text})" if _prec(node) < minimum else text


def to_source(node: ExprAST) -> str:
    """Quelltext mit minimaler Klammerung; parse(to_source(e)) == e."""
    if isinstance(node, Int):
        return str(node.value) if node.value >= 0 else f"({node.value})"
    if isinstance(node, Rat):
        return f"{node.num}/{node.den}"
    if isinstance(node, Var):
        return node.name
    if isinstance(node, (Add, Sub)):
        op = "+" if isinstance(node, Add) else "-"
        return f"{_wrap(node.left, 1)} {op} {_wrap(node.right, 2)}"
    if isinstance(node, (Mul, Div)):
        op = "*" if isinstance(node, Mul) else "/"
        return f"{_wrap(node.left, 2)} {op} {_wrap(node.right, 3)}"
    if isinstance(node, Neg):
        return f"-{_wrap(node.operand, 3)}"
    if isinstance(node, Pow):
        exponent = str(node.exponent) if node.exponent >= 0 else f"({node.exponent})"
        return f"{_wrap(node.base, 5)}^{exponent}"
    if isinstance(node, PowBase):
        return f"{_wrap(node.base, 5)}^{node.exponent}"
    if isinstance(node, Factorial):
        return f"{_wrap(node.argument, 5)}!"
    if isinstance(node, Binomial):
        return f"binomial({to_source(node.top)}, {to_source(node.bottom)})"
    raise TypeError(f"unknown expression node {node!r}")


def walk(node: ExprAST) -> Iterator[ExprAST]:
    """Alle Knoten in Präordnung."""
    yield node
    for child in children(node):
        yield from walk(child)


def children(node: ExprAST) -> Tuple[ExprAST, ...]:
    if isinstance(node, (Add, Sub, Mul, Div)):
        return (node.left, node.right)
    if isinstance(node, Neg):
        return (node.operand,)
    if isinstance(node, (Pow, PowBase)):
        return (node.base,)
    if isinstance(node, Factorial):
        return (node.argument,)
    if isinstance(node, Binomial):
        return (node.top, node.bottom)
    return ()


def contains_term_nodes(node: ExprAST) -> bool:
    """Fakultät, Binomialkoeffizient oder Potenz mit Variablenexponent."""
    return any(isinstance(n, (Factorial, Binomial, PowBase)) for n in walk(node))
