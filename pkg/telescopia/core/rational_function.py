"""
Telescopia - Rationale Funktionen
Quotienten von MultiPoly in kanonischer Form
"""

from __future__ import annotations

import logging
import re
from math import lcm as ilcm
from typing import Mapping, Sequence, Tuple

import sympy
from sympy import Rational

from ..errors import DivisionError, DomainError, PoleError
from .polynomial import MultiPoly, Scalar, align, canonical_variables, poly_lcm

logger = logging.getLogger(__name__)


# Nenner, die ohne Klammern geschrieben werden: x, x^3, 7
_ATOM = re.compile(r"[A-Za-z_]\w*(\^\d+)?|\d+")


class RationalFunction:
    """
    num/den mit ggT(num, den) = 1 und primitivem Nenner mit positivem Leitkoeffizienten.

    Durch die kanonische Form ist strukturelle Gleichheit gleich mathematischer Gleichheit.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly = None):
        if den is None:
            den = MultiPoly.one(num.variables)
        num, den = align(num, den)
        if den.is_zero:
            raise DivisionError("rational function with zero denominator")
        if num.is_zero:
            den = MultiPoly.one(num.variables)
        else:
            g = num.gcd(den)
            num, den = num.exact_div(g), den.exact_div(g)
            content, den = den.primitive()
            num = num.scale(1 / content)
        self.num = num
        self.den = den

    # ------------------------------------------------------------------
    # Konstruktion
    # ------------------------------------------------------------------

    @classmethod
    def constant(cls, value: Scalar, variables: Sequence[str] = ()) -> "RationalFunction":
        value = Rational(value)
        return cls(MultiPoly.constant(value.p, variables), MultiPoly.constant(value.q, variables))

    @classmethod
    def variable(cls, name: str, variables: Sequence[str] = ()) -> "RationalFunction":
        return cls(MultiPoly.variable(name, variables))

    @classmethod
    def from_expr(cls, expr, variables: Sequence[str] = ()) -> "RationalFunction":
        num, den = sympy.fraction(sympy.together(sympy.sympify(expr)))
        return cls(MultiPoly.from_expr(num, variables), MultiPoly.from_expr(den, variables))

    @classmethod
    def coerce(cls, value, variables: Sequence[str] = ()) -> "RationalFunction":
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, MultiPoly):
            return cls(value)
        return cls.constant(value, variables)

    # ------------------------------------------------------------------
    # Struktur
    # ------------------------------------------------------------------

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.num.variables

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.is_constant

    @property
    def is_constant(self) -> bool:
        return self.num.is_constant and self.den.is_constant

    @property
    def free_variables(self) -> Tuple[str, ...]:
        return canonical_variables(self.num.free_variables + self.den.free_variables)

    def value(self) -> Rational:
        if not self.is_constant:
            raise DomainError(f"rational function {self} is not constant")
        return self.num.value() / self.den.value()

    def as_polynomial(self) -> MultiPoly:
        if not self.is_polynomial:
            raise DomainError(f"{self} is not a polynomial")
        return self.num.scale(1 / self.den.value())

    # ------------------------------------------------------------------
    # Arithmetik
    # ------------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, MultiPoly):
            return RationalFunction(other)
        if isinstance(other, (int, Rational)) or (isinstance(other, sympy.Basic) and other.is_Rational):
            return RationalFunction.constant(other, self.variables)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise DivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int) -> "RationalFunction":
        if exponent >= 0:
            return RationalFunction(self.num ** exponent, self.den ** exponent)
        if self.is_zero:
            raise DivisionError("negative power of zero")
        return RationalFunction(self.den ** -exponent, self.num ** -exponent)

    def derivative(self, var: str) -> "RationalFunction":
        num_d = self.num.derivative(var)
        den_d = self.den.derivative(var)
        if den_d.is_zero:
            return RationalFunction(num_d, self.den)
        return RationalFunction(num_d * self.den - self.num * den_d, self.den * self.den)

    def shift(self, var: str, offset) -> "RationalFunction":
        if offset == 0:
            return self
        return RationalFunction(self.num.shift(var, offset), self.den.shift(var, offset))

    def evaluate(self, assignment: Mapping[str, Scalar]) -> "RationalFunction":
        """Teilweise Auswertung; PoleError wenn der Nenner dort verschwindet."""
        den = self.den.evaluate(assignment)
        if den.is_zero:
            raise PoleError(f"{self} has a pole at {dict(assignment)}", point=assignment)
        return RationalFunction(self.num.evaluate(assignment), den)

    def evaluate_value(self, assignment: Mapping[str, Scalar]) -> Rational:
        return self.evaluate(assignment).value()

    def substitute(self, mapping: Mapping[str, "RationalFunction"], variables: Sequence[str]) -> "RationalFunction":
        """Gleichzeitige Substitution von Variablen durch rationale Funktionen."""
        replacements = {sympy.Symbol(v): value.to_expr() for v, value in mapping.items()}
        return RationalFunction.from_expr(self.to_expr().xreplace(replacements), variables)

    # ------------------------------------------------------------------
    # Vergleich / Darstellung
    # ------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def to_expr(self):
        return self.num.to_expr() / self.den.to_expr()

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        # Brüche im Zähler in den Nenner ziehen: 1/(2*k) statt 1/2/k
        scale = ilcm(*(int(c.q) for c in self.num.terms.values()), 1)
        num = str(self.num.scale(scale))
        if len(self.num.terms) > 1:
            num = f"({num})"
        den = str(self.den.scale(scale))
        if not _ATOM.fullmatch(den):
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"


def normalize(num: MultiPoly, den: MultiPoly) -> RationalFunction:
    """Kanonische Form von num/den."""
    return RationalFunction(num, den)


def common_denominator(functions: Sequence[RationalFunction]) -> MultiPoly:
    """kgV der Nenner."""
    if not functions:
        return MultiPoly.one()
    result = functions[0].den
    for f in functions[1:]:
        result = poly_lcm(result, f.den)
    return result
