"""
Telescopia - Hermite-Reduktion
Zerlegung f = D_y(g) + h mit eigentlichem h und quadratfreiem Nenner in y
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Tuple

from sympy import Poly, Rational

from ..core.polynomial import canonical_variables
from ..core.rational_function import RationalFunction
from ..core.univariate import field_ratio, from_field_poly, scale_field_poly, to_field_poly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HermiteReductionResult:
    """f = ∂g/∂y + h, h eigentlich in y mit quadratfreiem Nenner."""

    g: RationalFunction
    h: RationalFunction
    variable: str

    def verify(self, f: RationalFunction) -> bool:
        return self.g.derivative(self.variable) + self.h == f

    def to_dict(self) -> Dict[str, object]:
        return {'variable': self.variable, 'g': str(self.g), 'h': str(self.h)}


def _gcdex_diophantine(a: Poly, b: Poly, c: Poly) -> Tuple[Poly, Poly]:
    """(s, t) mit s·a + t·b = c und deg s < deg b."""
    s, g = a.half_gcdex(b)
    s = s * c.exquo(g)
    if not s.is_zero and s.degree() >= b.degree():
        _, s = s.div(b)
    t = (c - s * a).exquo(b)
    return s, t


def hermite_reduce(f: RationalFunction, y: str) -> HermiteReductionResult:
    """
    Hermite-Reduktion in y über dem Körper Q(übrige Variablen).

    Der Polynomanteil wird in y integriert und g zugeschlagen; danach wird
    für jeden mehrfachen quadratfreien Faktor V^i die Vielfachheit mit
    erweitertem Euklid schrittweise gesenkt.

    Args:
        f: rationale Funktion
        y: Integrationsvariable

    Returns:
        HermiteReductionResult mit g, h
    """
    variables = canonical_variables(f.variables + (y,))
    A = to_field_poly(f.num, y, variables)
    D = to_field_poly(f.den, y, variables)

    Q, A = A.div(D)
    g = from_field_poly(Q.integrate(), variables)

    _, factors = D.sqf_list()
    for V, i in sorted(factors, key=lambda item: item[1]):
        if i < 2 or V.degree() <= 0:
            continue
        U = D.exquo(V ** i)
        for j in range(i - 1, 0, -1):
            B, C = _gcdex_diophantine(U * V.diff(), V, scale_field_poly(A, Rational(-1, j)))
            g = g + field_ratio(B, V ** j, variables)
            A = scale_field_poly(C, -j) - U * B.diff()
        D = U * V

    Q, A = A.div(D)
    if not Q.is_zero:
        g = g + from_field_poly(Q.integrate(), variables)
    h = field_ratio(A, D, variables)
    logger.debug("hermite_reduce in %s: h = %s", y, h)
    return HermiteReductionResult(g, h, y)


__all__ = ['HermiteReductionResult', 'hermite_reduce']
