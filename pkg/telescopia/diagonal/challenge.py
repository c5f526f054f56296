"""
Telescopia - Diagonal Challenge
Diagonale von 1/(1 − Σ x_i/(1 − x_i)): ODE, Rekurrenz und Abgleich mit der Reihe
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import sympy

from ..core.rational_function import RationalFunction
from ..errors import DomainError, UnsupportedError, VerificationError
from ..ore.recurrence import check_recurrence, ode_to_rec, rec_unroll_with_oracle
from .problem import DiagonalProblem, series_diagonal
from .telescoping import diagonal_ode

logger = logging.getLogger(__name__)


def challenge_problem(d: int) -> DiagonalProblem:
    """F = 1/(1 − Σ_{i=1..d} x_i/(1 − x_i))."""
    if d < 1:
        raise DomainError(f"dimension must be positive, got {d}")
    variables = tuple(f"x{i}" for i in range(1, d + 1))
    symbols = sympy.symbols(variables)
    expr = 1 / (1 - sum(s / (1 - s) for s in symbols))
    return DiagonalProblem(RationalFunction.from_expr(expr, variables), variables)


@dataclass
class ChallengeReport:
    """Ergebnis eines Diagonal-Laufs"""

    d: int
    telescoper: str
    recurrence: str
    verified_terms: int
    status: str

    # Zusatzinformationen
    failing_index: Optional[int] = None
    singular_indices: List[int] = field(default_factory=list)
    series: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status == "verified"

    def raise_for_status(self) -> None:
        if not self.ok:
            raise VerificationError(
                f"diagonal recurrence fails at index {self.failing_index}", failing_index=self.failing_index
            )

    def to_dict(self) -> Dict[str, Any]:
        """Konvertiert zu Dictionary für JSON-Ausgabe"""
        return {
            'd': self.d,
            'telescoper': self.telescoper,
            'recurrence': self.recurrence,
            'verified_terms': self.verified_terms,
            'status': self.status,
            'failing_index': self.failing_index,
            'singular_indices': list(self.singular_indices),
            'series': list(self.series),
        }


def challenge_run(d: int, N: int, problem: Optional[DiagonalProblem] = None,
                  x: str = "x", z: str = "z") -> ChallengeReport:
    """
    Berechnet die Diagonal-ODE, wandelt sie in eine Rekurrenz um und prüft diese
    an den ersten N+1 Reihenkoeffizienten (Einsetzen und Abrollen).

    Args:
        d: Anzahl der Variablen (1 oder 2)
        N: höchster geprüfter Index
        problem: anderes Diagonalproblem statt der Challenge-Funktion
        x, z: Diagonal- und Integrationsvariable

    Raises:
        UnsupportedError: d >= 3
    """
    if d not in (1, 2):
        raise UnsupportedError(f"diagonals in {d} variables are not supported (d <= 2)")
    problem = problem or challenge_problem(d)
    if problem.d != d:
        raise DomainError(f"problem has {problem.d} variables, expected {d}")

    operator = diagonal_ode(problem, x, z)
    recurrence = ode_to_rec(operator)
    series = series_diagonal(problem, N)

    check = check_recurrence(recurrence, series)
    unrolled, singular = rec_unroll_with_oracle(recurrence, N + 1, series)
    mismatches = [i for i, (u, s) in enumerate(zip(unrolled, series)) if u != s]
    failing = sorted(set(check.failing) | set(mismatches))

    report = ChallengeReport(
        d=d,
        telescoper=str(operator),
        recurrence=str(recurrence),
        verified_terms=len(series) if not failing else failing[0],
        status="verified" if not failing else "failed",
        failing_index=failing[0] if failing else None,
        singular_indices=sorted(set(singular) | set(check.singular)),
        series=[str(v) for v in series],
    )
    if failing:
        logger.error(f"diagonal recurrence fails at indices {failing}")
    else:
        logger.info(f"diagonal recurrence verified on {len(series)} terms")
    return report


__all__ = ['ChallengeReport', 'challenge_problem', 'challenge_run']
