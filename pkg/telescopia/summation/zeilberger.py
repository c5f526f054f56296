"""
Telescopia - Zeilberger
Schiebe-Telescoper für eigentliche hypergeometrische Terme (parametrisierter Gosper)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict

from ..core.rational_function import RationalFunction, common_denominator
from ..errors import NotFoundError, VerificationError
from ..ore.operator import OreAlgebraSpec, OreOperator
from .gosper import gosper_petkovsek_form, solve_parameterized_gosper
from .hyperterm import HyperTerm

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ShiftTelescoperResult:
    """P(n, Sn)·f = Δ_k(R·f) mit P ≠ 0 in kanonischer Form."""

    telescoper: OreOperator
    certificate: RationalFunction

    @property
    def order(self) -> int:
        return self.telescoper.order

    def to_dict(self) -> Dict[str, object]:
        return {
            'telescoper': str(self.telescoper),
            'certificate': str(self.certificate),
            'order': self.order,
            'coefficients': [str(c) for c in self.telescoper.coeffs],
        }


def zeilberger(f: HyperTerm, r_max: int = 5) -> ShiftTelescoperResult:
    """
    Telescoper minimaler Ordnung r <= r_max.

    Für jedes r wird A·x(k+1) − B·x(k) = Σ c_i·N_i·c(k) gelöst, wobei
    N_i = D·Π_{j<i} ρ_n(n+j,k) über dem gemeinsamen Nenner D steht.

    Raises:
        NotFoundError: kein Telescoper bis r_max
    """
    n, k = f.variables
    for r in range(r_max + 1):
        ratios = [f.ratio_n(i) for i in range(r + 1)]
        D = common_denominator(ratios)
        N = [ratio.num * D.exact_div(ratio.den) for ratio in ratios]
        shift_ratio = f.rho_k * RationalFunction(D, D.shift(k, 1))
        form = gosper_petkovsek_form(shift_ratio, k)

        A = form.z.num * form.a
        B = form.z.den * form.b.shift(k, -1)
        rhs = [form.z.den * N_i * form.c for N_i in N]
        solution = solve_parameterized_gosper(A, B, rhs, k)
        if solution is None:
            logger.debug("no telescoper of order %d", r)
            continue

        lambdas, x = solution
        telescoper = OreOperator(OreAlgebraSpec.shift(n), lambdas)
        certificate = RationalFunction(form.b.shift(k, -1)) * x / RationalFunction(form.c * D)
        telescoper, factor = telescoper.normalize()
        result = ShiftTelescoperResult(telescoper, factor * certificate)
        if not verify_ct_shift(f, result):
            raise VerificationError(f"telescoper {telescoper} of order {r} does not verify")
        logger.info("telescoper of order %d found: %s", result.order, telescoper)
        return result
    raise NotFoundError(r_max)


def verify_ct_shift(f: HyperTerm, res: ShiftTelescoperResult) -> bool:
    """
    Σ c_i(n)·Π_{j<i} ρ_n(n+j,k) = R(n,k+1)·ρ_k(n,k) − R(n,k) als rationale Identität.
    """
    if res.telescoper.is_zero:
        return False
    _, k = f.variables
    lhs = RationalFunction.constant(0)
    for i, c in enumerate(res.telescoper.coeffs):
        if not c.is_zero:
            lhs = lhs + c * f.ratio_n(i)
    R = res.certificate
    return lhs == R.shift(k, 1) * f.rho_k - R


__all__ = ['ShiftTelescoperResult', 'zeilberger', 'verify_ct_shift']
