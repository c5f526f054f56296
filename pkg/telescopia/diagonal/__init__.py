"""
Telescopia Diagonal
Diagonalen rationaler Potenzreihen über kreatives Teleskopieren
"""

from .problem import DiagonalProblem, series_diagonal, diagonal_integrand
from .telescoping import diagonal_ode
from .challenge import ChallengeReport, challenge_problem, challenge_run

__all__ = [
    'DiagonalProblem',
    'series_diagonal',
    'diagonal_integrand',
    'diagonal_ode',
    'ChallengeReport',
    'challenge_problem',
    'challenge_run',
]
