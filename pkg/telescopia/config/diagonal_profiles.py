"""
Vordefinierte Diagonalprobleme für `diagonal --profile`.

Aktuell enthalten:
    - Challenge-Funktion 1/(1 − Σ x_i/(1 − x_i)) für d = 1, 2
    - Zentrale Binomialkoeffizienten 1/(1 − x1 − x2)
    - Geometrische Diagonale 1/(1 − x1·x2)
    - Einvariabler Fall 1/(1 − 2·x1)
"""

from __future__ import annotations

from copy import deepcopy
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from ..errors import DomainError


@dataclass(frozen=True)
class DiagonalProfile:
    """Beschreibung eines benannten Diagonalproblems."""

    function: str
    variables: Tuple[str, ...]
    label: str = ""
    description: str = ""
    expected_series: Optional[Tuple[int, ...]] = None  # erste Diagonalkoeffizienten
    tags: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def d(self) -> int:
        return len(self.variables)

    def problem(self):
        """Parst `function` zu einem DiagonalProblem."""
        from ..diagonal.problem import DiagonalProblem
        from ..parsing.grammar import parse_expr
        from ..parsing.lowering import lower_rational

        ast = parse_expr(self.function, self.variables)
        return DiagonalProblem(lower_rational(ast, self.variables), tuple(self.variables))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "function": self.function,
            "variables": list(self.variables),
            "d": self.d,
            "label": self.label,
            "description": self.description,
            "expected_series": list(self.expected_series) if self.expected_series else None,
            "tags": list(self.tags),
        }


DIAGONAL_PROFILES: Dict[str, DiagonalProfile] = {
    "challenge_d1": DiagonalProfile(
        function="1/(1 - x1/(1 - x1))",
        variables=("x1",),
        label="Challenge d=1",
        description="Diagonale von 1/(1 - x1/(1 - x1)), a(n) = 2^(n-1) für n >= 1",
        expected_series=(1, 1, 2, 4, 8, 16),
        tags=("challenge",),
    ),
    "challenge_d2": DiagonalProfile(
        function="1/(1 - x1/(1 - x1) - x2/(1 - x2))",
        variables=("x1", "x2"),
        label="Challenge d=2",
        description="Diagonale von 1/(1 - x1/(1 - x1) - x2/(1 - x2))",
        expected_series=(1, 2, 14, 106, 838),
        tags=("challenge",),
    ),
    "central_binomial": DiagonalProfile(
        function="1/(1 - x1 - x2)",
        variables=("x1", "x2"),
        label="Zentrale Binomialkoeffizienten",
        description="a(n) = binomial(2n, n), (n+1)·a(n+1) = (4n+2)·a(n)",
        expected_series=(1, 2, 6, 20, 70, 252),
    ),
    "geometric": DiagonalProfile(
        function="1/(1 - x1*x2)",
        variables=("x1", "x2"),
        label="Geometrische Diagonale",
        description="a(n) = 1",
        expected_series=(1, 1, 1, 1, 1, 1),
    ),
    "single_variable": DiagonalProfile(
        function="1/(1 - 2*x1)",
        variables=("x1",),
        label="Einvariabel",
        description="a(n) = 2^n",
        expected_series=(1, 2, 4, 8, 16, 32),
    ),
}


def get_profile(name: str) -> DiagonalProfile:
    """Kopie eines Profils; unbekannte Namen führen zu DomainError."""
    try:
        return deepcopy(DIAGONAL_PROFILES[name])
    except KeyError as exc:
        raise DomainError(f"unknown diagonal profile '{name}' (known: {', '.join(list_profiles())})") from exc


def list_profiles() -> List[str]:
    return sorted(DIAGONAL_PROFILES)


__all__ = ['DiagonalProfile', 'DIAGONAL_PROFILES', 'get_profile', 'list_profiles']
