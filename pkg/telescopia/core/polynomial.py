"""
Telescopia - Polynome
Multivariate Polynome über Q mit kanonischer (alphabetischer) Variablenordnung
"""

from __future__ import annotations

import logging
from functools import reduce
from math import gcd as igcd, lcm as ilcm
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

import sympy
from sympy import Poly, QQ, Rational, Symbol
from sympy.polys.polyerrors import BasePolynomialError, ExactQuotientFailed

from ..errors import DivisionError, DomainError

logger = logging.getLogger(__name__)

Exponent = Tuple[int, ...]
Scalar = Union[int, Rational]

# Platzhalter-Generator für Polynome ohne Variablen (sympy verlangt mindestens einen)
_GROUND = Symbol("_ground")


def _symbols(variables: Sequence[str]) -> Tuple[Symbol, ...]:
    return tuple(Symbol(v) for v in variables) if variables else (_GROUND,)


def canonical_variables(variables: Iterable[str]) -> Tuple[str, ...]:
    """Sortierte, duplikatfreie Variablenliste."""
    return tuple(sorted(set(variables)))


def rational_content(coefficients: Iterable[Scalar]) -> Rational:
    """
    Inhalt einer Familie rationaler Zahlen: ggT der Zähler durch kgV der Nenner.

    Returns:
        Nicht-negative rationale Zahl, 0 wenn alle Einträge 0 sind
    """
    num, den = 0, 1
    for c in coefficients:
        c = Rational(c)
        if c == 0:
            continue
        num = igcd(num, int(c.p))
        den = ilcm(den, int(c.q))
    return Rational(num, den) if num else Rational(0)


def format_expr(expr) -> str:
    """sympy-Ausdruck in der Eingabesyntax (^ statt **)."""
    return str(expr).replace("**", "^")


class MultiPoly:
    """
    Dünn besetztes Polynom über Q.

    Die Variablen sind nach Namen sortiert; Operationen zwischen Polynomen
    mit verschiedenen Variablenmengen richten beide auf die Vereinigung aus.
    """

    __slots__ = ("variables", "_poly")

    def __init__(self, poly: Poly, variables: Tuple[str, ...]):
        self.variables = variables
        self._poly = poly

    # ------------------------------------------------------------------
    # Konstruktion
    # ------------------------------------------------------------------

    @classmethod
    def from_terms(cls, terms: Mapping[Exponent, Scalar], variables: Sequence[str]) -> "MultiPoly":
        variables = tuple(variables)
        canon = canonical_variables(variables)
        if len(canon) != len(variables):
            raise DomainError(f"duplicate variable names in {variables}")
        perm = [variables.index(v) for v in canon]
        rep: Dict[Exponent, Rational] = {}
        for exp, coeff in terms.items():
            if len(exp) != len(variables):
                raise DomainError(f"exponent {exp} does not match variables {variables}")
            coeff = Rational(coeff)
            if coeff == 0:
                continue
            key = tuple(exp[i] for i in perm) if canon else (0,)
            rep[key] = rep.get(key, Rational(0)) + coeff
        if not rep:
            rep = {(0,) * max(len(canon), 1): Rational(0)}
        return cls(Poly.from_dict(rep, *_symbols(canon), domain=QQ), canon)

    @classmethod
    def from_expr(cls, expr, variables: Sequence[str] = ()) -> "MultiPoly":
        canon = canonical_variables(variables)
        try:
            poly = Poly(sympy.sympify(expr), *_symbols(canon), domain=QQ)
        except BasePolynomialError as exc:
            raise DomainError(f"not a polynomial over QQ in {canon}: {expr}") from exc
        return cls(poly, canon)

    @classmethod
    def constant(cls, value: Scalar, variables: Sequence[str] = ()) -> "MultiPoly":
        canon = canonical_variables(variables)
        return cls.from_terms({(0,) * len(canon): value}, canon)

    @classmethod
    def zero(cls, variables: Sequence[str] = ()) -> "MultiPoly":
        return cls.constant(0, variables)

    @classmethod
    def one(cls, variables: Sequence[str] = ()) -> "MultiPoly":
        return cls.constant(1, variables)

    @classmethod
    def variable(cls, name: str, variables: Sequence[str] = ()) -> "MultiPoly":
        canon = canonical_variables(tuple(variables) + (name,))
        exp = tuple(1 if v == name else 0 for v in canon)
        return cls.from_terms({exp: 1}, canon)

    # ------------------------------------------------------------------
    # Struktur
    # ------------------------------------------------------------------

    @property
    def terms(self) -> Dict[Exponent, Rational]:
        raw = self._poly.as_dict(native=False)
        if not self.variables:
            return {(): Rational(c) for c in raw.values() if c != 0}
        return {exp: Rational(c) for exp, c in raw.items() if c != 0}

    @property
    def is_zero(self) -> bool:
        return self._poly.is_zero

    @property
    def is_constant(self) -> bool:
        return all(not any(exp) for exp in self.terms)

    @property
    def free_variables(self) -> Tuple[str, ...]:
        used = set()
        for exp in self.terms:
            used.update(v for v, e in zip(self.variables, exp) if e)
        return tuple(v for v in self.variables if v in used)

    def degree(self, var: str) -> int:
        """Grad in `var`; -1 für das Nullpolynom."""
        if self.is_zero:
            return -1
        if var not in self.variables:
            return 0
        return int(self._poly.degree(Symbol(var)))

    def total_degree(self) -> int:
        if self.is_zero:
            return -1
        return max(sum(exp) for exp in self.terms)

    def leading_coefficient(self) -> Rational:
        """Leitkoeffizient bezüglich grlex."""
        if self.is_zero:
            return Rational(0)
        return Rational(self._poly.LC(order="grlex"))

    def value(self) -> Rational:
        if not self.is_constant:
            raise DomainError(f"polynomial {self} is not constant")
        terms = self.terms
        return next(iter(terms.values())) if terms else Rational(0)

    def coefficients_in(self, var: str) -> Dict[int, "MultiPoly"]:
        """Zerlegung nach Potenzen von `var`; die Koeffizienten sind frei von `var`."""
        if self.is_zero:
            return {}
        if var not in self.variables:
            return {0: self}
        idx = self.variables.index(var)
        groups: Dict[int, Dict[Exponent, Rational]] = {}
        for exp, coeff in self.terms.items():
            key = exp[:idx] + (0,) + exp[idx + 1:]
            groups.setdefault(exp[idx], {})[key] = coeff
        return {e: MultiPoly.from_terms(t, self.variables) for e, t in groups.items()}

    def coefficient_vector(self, var: str) -> Tuple["MultiPoly", ...]:
        """Koeffizienten in `var` von Grad 0 bis deg, fehlende als Nullpolynom."""
        coeffs = self.coefficients_in(var)
        zero = MultiPoly.zero(self.variables)
        return tuple(coeffs.get(e, zero) for e in range(self.degree(var) + 1))

    def lift(self, variables: Iterable[str]) -> "MultiPoly":
        """Darstellung über einer anderen Variablenmenge (muss alle benutzten enthalten)."""
        canon = canonical_variables(variables)
        if canon == self.variables:
            return self
        idx = {v: i for i, v in enumerate(self.variables)}
        terms: Dict[Exponent, Rational] = {}
        for exp, coeff in self.terms.items():
            for v, e in zip(self.variables, exp):
                if e and v not in canon:
                    raise DomainError(f"variable {v} is used by {self} but missing from {canon}")
            terms[tuple(exp[idx[v]] if v in idx else 0 for v in canon)] = coeff
        return MultiPoly.from_terms(terms, canon)

    # ------------------------------------------------------------------
    # Arithmetik
    # ------------------------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Rational)) or (isinstance(other, sympy.Basic) and other.is_Rational):
            return MultiPoly.constant(other, self.variables)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = align(self, other)
        return MultiPoly(a._poly + b._poly, a.variables)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = align(self, other)
        return MultiPoly(a._poly - b._poly, a.variables)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = align(self, other)
        return MultiPoly(a._poly * b._poly, a.variables)

    __rmul__ = __mul__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(-self._poly, self.variables)

    def __pow__(self, exponent: int) -> "MultiPoly":
        if exponent < 0:
            raise DomainError("negative power of a polynomial")
        return MultiPoly(self._poly ** exponent, self.variables)

    def scale(self, factor: Scalar) -> "MultiPoly":
        return self * MultiPoly.constant(factor, self.variables)

    def exact_div(self, other) -> "MultiPoly":
        """Exakte Division; DivisionError bei Rest oder Nullteiler."""
        other = self._coerce(other)
        a, b = align(self, other)
        if b.is_zero:
            raise DivisionError("division by the zero polynomial")
        try:
            quotient = a._poly.exquo(b._poly)
        except ExactQuotientFailed as exc:
            raise DivisionError(f"{b} does not divide {a}") from exc
        return MultiPoly(quotient, a.variables)

    def primitive(self) -> Tuple[Rational, "MultiPoly"]:
        """
        Zerlegung in Inhalt und primitiven Teil.

        Returns:
            (c, p) mit self = c*p, p ganzzahlig, teilerfremd, positiver Leitkoeffizient
        """
        if self.is_zero:
            return Rational(0), self
        content = rational_content(self.terms.values())
        if self.leading_coefficient() < 0:
            content = -content
        return content, self.scale(1 / content)

    def gcd(self, other) -> "MultiPoly":
        """ggT nach Inhaltskonvention: ggT der Inhalte mal ggT der primitiven Teile."""
        other = self._coerce(other)
        a, b = align(self, other)
        if a.is_zero and b.is_zero:
            raise DomainError("gcd(0, 0) is undefined")
        if a.is_zero or b.is_zero:
            g = b if a.is_zero else a
            return g if g.leading_coefficient() > 0 else -g
        content = rational_content([a.primitive()[0], b.primitive()[0]])
        _, g = MultiPoly(a._poly.gcd(b._poly), a.variables).primitive()
        return g.scale(content)

    def derivative(self, var: str) -> "MultiPoly":
        if var not in self.variables:
            return MultiPoly.zero(self.variables)
        return MultiPoly(self._poly.diff(Symbol(var)), self.variables)

    def shift(self, var: str, offset) -> "MultiPoly":
        """p(var + offset)."""
        if offset == 0 or var not in self.variables:
            return self
        sym = Symbol(var)
        return MultiPoly.from_expr(self.to_expr().xreplace({sym: sym + offset}), self.variables)

    def evaluate(self, assignment: Mapping[str, Scalar]) -> "MultiPoly":
        """Setzt Werte für einen Teil der Variablen ein; diese verschwinden aus `variables`."""
        relevant = {v: Rational(val) for v, val in assignment.items() if v in self.variables}
        if not relevant:
            return self
        remaining = tuple(v for v in self.variables if v not in relevant)
        poly = self._poly
        for var, val in relevant.items():
            poly = poly.eval(Symbol(var), val)
            if not isinstance(poly, Poly):
                return MultiPoly.constant(Rational(poly), remaining)
        return MultiPoly(poly, remaining)

    # ------------------------------------------------------------------
    # Vergleich / Darstellung
    # ------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = align(self, other)
        return a._poly == b._poly

    def __hash__(self) -> int:
        return hash(frozenset(
            (tuple((v, e) for v, e in zip(self.variables, exp) if e), coeff)
            for exp, coeff in self.terms.items()
        ))

    def __bool__(self) -> bool:
        return not self.is_zero

    def to_expr(self):
        return self._poly.as_expr()

    def __str__(self) -> str:
        return format_expr(self.to_expr())

    def __repr__(self) -> str:
        return f"MultiPoly({self}, variables={self.variables})"


def align(a: MultiPoly, b: MultiPoly) -> Tuple[MultiPoly, MultiPoly]:
    """Beide Polynome über der Vereinigung ihrer Variablen."""
    if a.variables == b.variables:
        return a, b
    variables = canonical_variables(a.variables + b.variables)
    return a.lift(variables), b.lift(variables)


def poly_add(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a + b


def poly_sub(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a - b


def poly_mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a * b


def poly_exact_divide(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a.exact_div(b)


def poly_gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a.gcd(b)


def poly_lcm(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    if a.is_zero or b.is_zero:
        return MultiPoly.zero(canonical_variables(a.variables + b.variables))
    return (a * b).exact_div(a.gcd(b))


def poly_gcd_many(polys: Iterable[MultiPoly]) -> MultiPoly:
    polys = [p for p in polys if not p.is_zero]
    if not polys:
        raise DomainError("gcd of zero polynomials is undefined")
    return reduce(poly_gcd, polys)


def squarefree_part(q: MultiPoly, var: str) -> MultiPoly:
    """q / gcd(q, dq/dvar): keine mehrfachen Nullstellen in `var`."""
    if q.is_zero:
        raise DomainError("squarefree part of the zero polynomial")
    return q.exact_div(q.gcd(q.derivative(var)))


def content_in(p: MultiPoly, var: str) -> Tuple[MultiPoly, MultiPoly]:
    """
    Inhalt bezüglich `var`: ggT der Koeffizienten als Polynome in den übrigen Variablen.

    Returns:
        (content, primitive) mit p = content * primitive
    """
    if p.is_zero:
        raise DomainError("content of the zero polynomial")
    content = poly_gcd_many(p.coefficients_in(var).values())
    return content, p.exact_div(content)
