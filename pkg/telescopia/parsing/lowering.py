"""
Telescopia - Lowering
Übersetzt Ausdrucksbäume in rationale Funktionen oder eigentliche hypergeometrische Terme
"""

from __future__ import annotations

import logging
from typing import Dict, List, Sequence, Tuple, Union

import sympy
from sympy import Rational

from ..core.polynomial import MultiPoly
from ..core.rational_function import RationalFunction
from ..errors import UnsupportedExpressionError
from ..summation.hyperterm import GammaFactor, ProperTermExpr
from .ast import (
    Add, Binomial, Div, ExprAST, Factorial, Int, Mul, Neg, Pow, PowBase, Rat, Sub, Var,
    contains_term_nodes, to_source,
)

logger = logging.getLogger(__name__)


def lower_rational(node: ExprAST, variables: Sequence[str]) -> RationalFunction:
    """
    Rationaler Ausdruck -> RationalFunction.

    Raises:
        UnsupportedExpressionError: Fakultät, Binomialkoeffizient oder c^n im Ausdruck
        DivisionError: Division durch null
    """
    if isinstance(node, Int):
        return RationalFunction.constant(node.value, variables)
    if isinstance(node, Rat):
        return RationalFunction.constant(Rational(node.num, node.den), variables)
    if isinstance(node, Var):
        return RationalFunction.variable(node.name, variables)
    if isinstance(node, Add):
        return lower_rational(node.left, variables) + lower_rational(node.right, variables)
    if isinstance(node, Sub):
        return lower_rational(node.left, variables) - lower_rational(node.right, variables)
    if isinstance(node, Mul):
        return lower_rational(node.left, variables) * lower_rational(node.right, variables)
    if isinstance(node, Div):
        return lower_rational(node.left, variables) / lower_rational(node.right, variables)
    if isinstance(node, Neg):
        return -lower_rational(node.operand, variables)
    if isinstance(node, Pow):
        return lower_rational(node.base, variables) ** node.exponent
    raise UnsupportedExpressionError(f"'{to_source(node)}' is not a rational expression")


class _TermCollector:
    """Sammelt Faktoren eines Produkts/Quotienten eigentlicher Terme."""

    def __init__(self, variables: Tuple[str, str]):
        self.variables = variables
        self.rational = RationalFunction.constant(1, variables)
        self.c = Rational(1)
        self.d = Rational(1)
        self.gammas: Dict[Tuple[int, int, Rational], int] = {}

    def collect(self, node: ExprAST, exponent: int) -> None:
        if isinstance(node, Mul):
            self.collect(node.left, exponent)
            self.collect(node.right, exponent)
        elif isinstance(node, Div):
            self.collect(node.left, exponent)
            self.collect(node.right, -exponent)
        elif isinstance(node, Neg):
            self.collect(node.operand, exponent)
            if exponent % 2:
                self.rational = -self.rational
        elif isinstance(node, Pow):
            self.collect(node.base, exponent * node.exponent)
        elif isinstance(node, Factorial):
            self._gamma(node.argument, 1, exponent)
        elif isinstance(node, Binomial):
            top = self._linear(node.top)
            bottom = self._linear(node.bottom)
            self._add_gamma(top, 1, exponent)
            self._add_gamma(bottom, 1, -exponent)
            self._add_gamma(tuple(a - b for a, b in zip(top, bottom)), 1, -exponent)
        elif isinstance(node, PowBase):
            self._geometric(node, exponent)
        elif contains_term_nodes(node):
            raise UnsupportedExpressionError(
                f"'{to_source(node)}' is a sum of terms, not a hypergeometric term")
        else:
            self.rational = self.rational * lower_rational(node, self.variables) ** exponent

    def _geometric(self, node: PowBase, exponent: int) -> None:
        if contains_term_nodes(node.base):
            raise UnsupportedExpressionError(f"base of '{to_source(node)}' must be a rational constant")
        base = lower_rational(node.base, self.variables)
        if not base.is_constant or base.is_zero:
            raise UnsupportedExpressionError(f"base of '{to_source(node)}' must be a nonzero rational constant")
        n, k = self.variables
        if node.exponent == n:
            self.c *= base.value() ** exponent
        elif node.exponent == k:
            self.d *= base.value() ** exponent
        else:
            raise UnsupportedExpressionError(f"exponent of '{to_source(node)}' must be {n} or {k}")

    def _linear(self, node: ExprAST) -> Tuple[int, int, Rational]:
        """(α, β, γ) eines Arguments α·n + β·k + γ mit ganzzahligen α, β."""
        if contains_term_nodes(node):
            raise UnsupportedExpressionError(f"argument '{to_source(node)}' must be linear in {self.variables}")
        value = lower_rational(node, self.variables)
        if not value.is_polynomial:
            raise UnsupportedExpressionError(f"argument '{to_source(node)}' must be linear in {self.variables}")
        return _linear_coefficients(value.as_polynomial(), self.variables, to_source(node))

    def _gamma(self, argument: ExprAST, offset: int, exponent: int) -> None:
        self._add_gamma(self._linear(argument), offset, exponent)

    def _add_gamma(self, linear, offset, exponent: int) -> None:
        alpha, beta, gamma = linear
        key = (int(alpha), int(beta), Rational(gamma) + offset)
        self.gammas[key] = self.gammas.get(key, 0) + exponent

    def build(self) -> ProperTermExpr:
        n, k = self.variables
        rational = self.rational
        if rational.is_zero:
            raise UnsupportedExpressionError("the zero term is not a hypergeometric term")
        symbols = [sympy.Symbol(n), sympy.Symbol(k)]
        content, factors = sympy.factor_list(rational.den.lift(self.variables).to_expr(), *symbols)
        polynomial = rational.num.lift(self.variables).scale(1 / Rational(content))
        for factor, multiplicity in factors:
            linear = _linear_coefficients(MultiPoly.from_expr(factor, self.variables), self.variables, str(factor))
            # 1/L = Γ(L)/Γ(L+1)
            self._add_gamma(linear, 0, multiplicity)
            self._add_gamma(linear, 1, -multiplicity)
        gamma_factors = tuple(GammaFactor(a, b, g, e) for (a, b, g), e in self.gammas.items() if e != 0)
        return ProperTermExpr(polynomial, self.c, self.d, gamma_factors, self.variables)


def _linear_coefficients(p: MultiPoly, variables: Tuple[str, str], text: str) -> Tuple[int, int, Rational]:
    n, k = variables
    lifted = p.lift(variables)
    if lifted.total_degree() > 1:
        raise UnsupportedExpressionError(f"'{text}' is not linear in {n}, {k}")
    index = {v: i for i, v in enumerate(lifted.variables)}
    alpha = beta = gamma = Rational(0)
    for exp, coeff in lifted.terms.items():
        if exp[index[n]]:
            alpha = coeff
        elif exp[index[k]]:
            beta = coeff
        else:
            gamma = coeff
    if not (alpha.is_integer and beta.is_integer):
        raise UnsupportedExpressionError(f"'{text}' needs integer coefficients of {n} and {k}")
    return int(alpha), int(beta), gamma


def lower_term(node: ExprAST, variables: Tuple[str, str] = ("n", "k")) -> ProperTermExpr:
    """
    Produkt/Quotient aus Fakultäten, Binomialkoeffizienten, c^n, d^k und
    rationalen Faktoren -> ProperTermExpr.

    binomial(a, b) = Γ(a+1)/(Γ(b+1)·Γ(a−b+1)), a! = Γ(a+1); lineare Faktoren
    L im Nenner werden zu Γ(L)/Γ(L+1).

    Raises:
        UnsupportedExpressionError: Summen von Termen, nichtlineare Argumente
            oder Nenner, die nicht in lineare Faktoren zerfallen
    """
    collector = _TermCollector(tuple(variables))
    collector.collect(node, 1)
    term = collector.build()
    logger.debug("lowered %s to %s", to_source(node), term)
    return term


def lower_expr(node: ExprAST, variables: Sequence[str]) -> Union[RationalFunction, ProperTermExpr]:
    """Rationaler Ausdruck -> RationalFunction, sonst eigentlicher Term in (n, k)."""
    if not contains_term_nodes(node):
        return lower_rational(node, variables)
    if len(variables) != 2:
        raise UnsupportedExpressionError(
            f"hypergeometric terms need exactly two variables (n, k), got {tuple(variables)}")
    return lower_term(node, tuple(variables))


__all__: List[str] = ['lower_rational', 'lower_term', 'lower_expr']
