"""
Telescopia - Diagonal-ODE
Annihilierender Differentialoperator der Diagonale für d = 1 und d = 2
"""

from __future__ import annotations

import logging

from ..core.rational_function import RationalFunction
from ..errors import UnsupportedError, VerificationError
from ..integration.methods.base_method import verify_ct_diff
from ..integration.methods.reduction_method import reduction_ct
from ..ore.operator import OreAlgebraSpec, OreOperator
from .problem import DiagonalProblem, diagonal_integrand

logger = logging.getLogger(__name__)


def diagonal_ode(problem: DiagonalProblem, x: str = "x", z: str = "z") -> OreOperator:
    """
    L(x, Dx) mit L·diag(F) = 0.

    d = 1: die Diagonale ist F(x) selbst, L = P·Q·Dx − (P'·Q − P·Q').
    d = 2: Telescoper des Integranden F(z, x/z)/z bezüglich z.

    Raises:
        UnsupportedError: d >= 3
    """
    spec = OreAlgebraSpec.derivation(x)
    if problem.d == 1:
        (x1,) = problem.variables
        F = problem.F.substitute({x1: RationalFunction.variable(x)}, (x,))
        if F.is_zero:
            return OreOperator(spec, (1,))
        num, den = RationalFunction(F.num), RationalFunction(F.den)
        operator = OreOperator(spec, (-(num.derivative(x) * den - num * den.derivative(x)), num * den))
        operator, _ = operator.normalize()
        return operator
    if problem.d == 2:
        integrand = diagonal_integrand(problem, x, z)
        result = reduction_ct(integrand, x, z)
        if not verify_ct_diff(integrand, result):
            raise VerificationError(f"telescoper {result.telescoper} of the diagonal integrand does not verify")
        logger.info("diagonal telescoper of order %d", result.order)
        return result.telescoper
    raise UnsupportedError(f"diagonals in {problem.d} variables are not supported (d <= 2)")


__all__ = ['diagonal_ode']
