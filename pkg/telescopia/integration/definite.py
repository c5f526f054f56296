"""
Telescopia - Bestimmte Integrale
Inhomogenität der Differentialgleichung für ∫_a^b f(x, y) dy aus einem Telescoper
"""

from __future__ import annotations

from sympy import Rational

from ..core.rational_function import RationalFunction
from ..errors import PoleError
from .methods.base_method import DiffTelescoperResult


def integral_rhs(result: DiffTelescoperResult, lower, upper) -> RationalFunction:
    """
    G(x) = g(x, upper) − g(x, lower), so dass L·∫_lower^upper f dy = G.

    Raises:
        PoleError: Zertifikat hat an einer Grenze einen Pol
    """
    y = result.integration_variable
    g = result.certificate
    try:
        return g.evaluate({y: Rational(upper)}) - g.evaluate({y: Rational(lower)})
    except PoleError as exc:
        raise PoleError(f"certificate {g} is singular at an integration bound", point=exc.point) from exc
