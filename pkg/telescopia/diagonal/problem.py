"""
Telescopia - Diagonalprobleme
Rationale Potenzreihen, ihre Diagonale und der Integrand der Residuendarstellung
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Tuple

from sympy import Rational

from ..core.polynomial import MultiPoly, Exponent
from ..core.rational_function import RationalFunction
from ..errors import DomainError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DiagonalProblem:
    """F = P/Q in x1..xd mit Q(0) ≠ 0."""

    F: RationalFunction
    variables: Tuple[str, ...]

    def __post_init__(self):
        if not self.variables:
            raise DomainError("a diagonal problem needs at least one variable")
        extra = set(self.F.free_variables) - set(self.variables)
        if extra:
            raise DomainError(f"function uses variables outside {self.variables}: {sorted(extra)}")
        origin = {v: 0 for v in self.variables}
        if self.F.den.evaluate(origin).is_zero:
            raise DomainError(f"{self.F} has a pole at the origin")

    @property
    def d(self) -> int:
        return len(self.variables)

    def to_dict(self) -> Dict[str, object]:
        return {'function': str(self.F), 'variables': list(self.variables), 'd': self.d}


def _terms_over(p: MultiPoly, variables: Tuple[str, ...]) -> Dict[Exponent, Rational]:
    lifted = p.lift(variables)
    order = [lifted.variables.index(v) for v in variables]
    return {tuple(exp[i] for i in order): c for exp, c in lifted.terms.items()}


def series_diagonal(problem: DiagonalProblem, N: int) -> List[Rational]:
    """
    Diagonalkoeffizienten a(0..N) der Taylor-Reihe von F.

    Koeffizienten im Würfel [0, N]^d aus Q·S = P:
    S_α = (P_α − Σ_{β≠0} Q_β·S_{α−β}) / Q_0, in lexikographischer Reihenfolge.
    """
    if N < 0:
        raise DomainError(f"number of terms must be non-negative, got {N}")
    variables = problem.variables
    num = _terms_over(problem.F.num, variables)
    den = _terms_over(problem.F.den, variables)
    zero = (0,) * problem.d
    q0 = den.get(zero, Rational(0))
    den_rest = [(beta, c) for beta, c in den.items() if beta != zero and all(b <= N for b in beta)]

    series: Dict[Exponent, Rational] = {}
    for alpha in product(range(N + 1), repeat=problem.d):
        acc = num.get(alpha, Rational(0))
        for beta, c in den_rest:
            if all(b <= a for a, b in zip(alpha, beta)):
                acc -= c * series[tuple(a - b for a, b in zip(alpha, beta))]
        series[alpha] = acc / q0
    return [series[(n,) * problem.d] for n in range(N + 1)]


def diagonal_integrand(problem: DiagonalProblem, x: str = "x", z: str = "z") -> RationalFunction:
    """
    G(x, z) = F(z, x/z)/z; die Diagonale ist das Residuum in z = 0 (d = 2).
    """
    if problem.d != 2:
        raise DomainError(f"diagonal integrand is defined for d = 2, got d = {problem.d}")
    x1, x2 = problem.variables
    zv = RationalFunction.variable(z)
    xv = RationalFunction.variable(x)
    substituted = problem.F.substitute({x1: zv, x2: xv / zv}, (x, z))
    return substituted / zv


__all__ = ['DiagonalProblem', 'series_diagonal', 'diagonal_integrand']
