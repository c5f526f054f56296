"""
Telescopia - Univariate Sicht
Polynome in einer Hauptvariablen mit Koeffizienten im Körper Q(übrige Variablen)
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

from sympy import Poly, QQ, Rational, Symbol, divisors

from ..errors import DomainError
from .polynomial import MultiPoly, canonical_variables
from .rational_function import RationalFunction


def coefficient_field(variables: Sequence[str], main: str):
    """Q bzw. Q(übrige Variablen) als sympy-Domäne."""
    others = [Symbol(v) for v in canonical_variables(variables) if v != main]
    return QQ.frac_field(*others) if others else QQ


def to_field_poly(p: MultiPoly, main: str, variables: Sequence[str]) -> Poly:
    """MultiPoly als univariates sympy-Poly in `main` über Q(übrige Variablen)."""
    return Poly(p.to_expr(), Symbol(main), domain=coefficient_field(variables, main))


def from_field_poly(poly: Poly, variables: Sequence[str]) -> RationalFunction:
    return RationalFunction.from_expr(poly.as_expr(), variables)


def field_ratio(num: Poly, den: Poly, variables: Sequence[str]) -> RationalFunction:
    return RationalFunction.from_expr(num.as_expr() / den.as_expr(), variables)


def scale_field_poly(poly: Poly, factor) -> Poly:
    return poly * Poly(factor, *poly.gens, domain=poly.domain)


def integer_roots(p: MultiPoly, var: str) -> List[int]:
    """
    Ganzzahlige Nullstellen eines univariaten Polynoms mit rationalen Koeffizienten.

    Kandidaten sind die Teiler des niedrigsten nichtverschwindenden Koeffizienten
    (nach Multiplikation auf ganzzahlige Koeffizienten) sowie 0.
    """
    if p.is_zero:
        raise DomainError("integer roots of the zero polynomial")
    if set(p.free_variables) - {var}:
        raise DomainError(f"{p} is not univariate in {var}")
    _, prim = p.primitive()
    coeffs = [int(c.value()) for c in prim.coefficient_vector(var)]
    low = next(i for i, c in enumerate(coeffs) if c != 0)
    roots = {0} if low > 0 else set()
    reduced = coeffs[low:]
    if len(reduced) == 1:
        return sorted(roots)

    def horner(x: int) -> int:
        acc = 0
        for c in reversed(reduced):
            acc = acc * x + c
        return acc

    for d in divisors(abs(reduced[0])):
        for candidate in (d, -d):
            if horner(candidate) == 0:
                roots.add(candidate)
    return sorted(roots)


def leading_in(p: MultiPoly, var: str) -> Tuple[int, MultiPoly]:
    """(Grad, Leitkoeffizient) in `var`."""
    deg = p.degree(var)
    if deg < 0:
        return -1, MultiPoly.zero(p.variables)
    return deg, p.coefficients_in(var).get(deg, MultiPoly.zero(p.variables))
