"""
Telescopia - Summenrekurrenzen
Von (P, R) zur inhomogenen Rekurrenz der bestimmten Summe F(n) = Σ_{k=0}^{n} f(n,k)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional

from sympy import Rational

from ..core.polynomial import MultiPoly
from ..core.rational_function import RationalFunction
from ..errors import CertificatePoleError, PoleError, VerificationError
from ..ore.recurrence import Recurrence, check_recurrence, rec_unroll_with_oracle
from .hyperterm import HyperTerm, evaluate_term
from .zeilberger import ShiftTelescoperResult, verify_ct_shift

logger = logging.getLogger(__name__)


def _term(f: HyperTerm, n0: int, k0: int) -> Rational:
    try:
        return evaluate_term(f, n0, k0)
    except PoleError as exc:
        raise CertificatePoleError(f"term has a pole at ({n0}, {k0})", point=exc.point) from exc


def _cancelled_value(f: HyperTerm, R: RationalFunction, n0: int, k0: int) -> Optional[Rational]:
    """Bei bekannter Γ-Darstellung f = p·T wird zuerst R·p gekürzt."""
    if f.source is None:
        return None
    n, k = f.variables
    try:
        factor = (R * RationalFunction(f.source.polynomial.lift(f.variables))).evaluate({n: n0, k: k0}).value()
        rest = replace(f.source, polynomial=MultiPoly.one(f.variables))
        return factor * rest.evaluate(n0, k0)
    except PoleError:
        return None


def certificate_term_value(f: HyperTerm, R: RationalFunction, n0: int, k0: int) -> Rational:
    """
    g(n0, k0) = R(n0,k0)·f(n0,k0), auch wenn R dort einen Pol und f eine Nullstelle hat.

    Der Quotient wird schrittweise entlang k (und dann n) zurück zu einem Punkt
    verschoben, an dem sowohl der gekürzte rationale Faktor als auch der Term
    endlich sind: R(n,k)·Π_{j=1..m} ρ_k(n,k−j) · f(n0,k0−m).

    Raises:
        CertificatePoleError: kein solcher Punkt auf dem Weg zu (0,0)
    """
    cancelled = _cancelled_value(f, R, n0, k0)
    if cancelled is not None:
        return cancelled
    n, k = f.variables
    Q = R
    for m in range(k0 + 1):
        try:
            q_value = Q.evaluate({n: n0, k: k0}).value()
            return q_value * evaluate_term(f, n0, k0 - m)
        except PoleError:
            pass
        if m < k0:
            Q = Q * f.rho_k.shift(k, -(m + 1))

    try:
        T = Q.evaluate({k: k0})
    except PoleError as exc:
        raise CertificatePoleError(f"certificate {R} has a pole at ({n0}, {k0})", point={n: n0, k: k0}) from exc
    rho_n = f.rho_n
    for m in range(n0 + 1):
        try:
            t_value = T.evaluate({n: n0}).value()
            return t_value * evaluate_term(f, n0 - m, 0)
        except PoleError:
            pass
        if m < n0:
            try:
                T = T * rho_n.shift(n, -(m + 1)).evaluate({k: 0})
            except PoleError:
                break
    raise CertificatePoleError(f"certificate {R} has a pole at ({n0}, {k0})", point={n: n0, k: k0})


@dataclass(frozen=True)
class BoundaryRhs:
    """
    G(n) = Σ_i c_i(n)·Σ_{j=1..i} f(n+i, n+j) + g(n, n+1) − g(n, 0)

    Rechte Seite von Σ c_i(n)·F(n+i) = G(n) für F(n) = Σ_{k=0}^{n} f(n,k).
    """

    term: HyperTerm
    result: ShiftTelescoperResult

    def __call__(self, n0: int) -> Rational:
        n, _ = self.term.variables
        total = Rational(0)
        for i, c in enumerate(self.result.telescoper.coeffs):
            if i == 0 or c.is_zero:
                continue
            c_value = c.evaluate({n: n0}).value()
            for j in range(1, i + 1):
                total += c_value * _term(self.term, n0 + i, n0 + j)
        R = self.result.certificate
        total += certificate_term_value(self.term, R, n0, n0 + 1)
        total -= certificate_term_value(self.term, R, n0, 0)
        return total


def ct_to_sum_recurrence(f: HyperTerm, res: ShiftTelescoperResult) -> Recurrence:
    """
    Inhomogene Rekurrenz der Summe F(n) = Σ_{k=0}^{n} f(n,k).

    Raises:
        VerificationError: (P, R) ist kein gültiges Paar für f
    """
    if not verify_ct_shift(f, res):
        raise VerificationError(f"telescoper {res.telescoper} does not verify for this term")
    return Recurrence(res.telescoper, BoundaryRhs(f, res))


def definite_sum(f: HyperTerm, n0: int) -> Rational:
    """Σ_{k=0}^{n0} f(n0, k) durch direkte Auswertung."""
    return sum((evaluate_term(f, n0, k0) for k0 in range(n0 + 1)), Rational(0))


@dataclass
class SumCheckReport:
    """Vergleich von Rekurrenz und direkt berechneten Summen."""

    sums: List[Rational] = field(default_factory=list)
    unrolled: List[Rational] = field(default_factory=list)
    failing: List[int] = field(default_factory=list)
    singular: List[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failing

    def to_dict(self) -> Dict[str, object]:
        return {
            'sums': [str(v) for v in self.sums],
            'failing': list(self.failing),
            'singular': list(self.singular),
            'verified_terms': len(self.sums) - len(self.failing),
        }


def check_sum_recurrence(f: HyperTerm, rec: Recurrence, count: int) -> SumCheckReport:
    """
    Prüft die Rekurrenz an den ersten `count` Summen: Einsetzen und Abrollen
    (Startwerte und singuläre Indizes aus der direkten Summe).
    """
    sums = [definite_sum(f, m) for m in range(count)]
    residuals = check_recurrence(rec, sums)
    unrolled, singular = rec_unroll_with_oracle(rec, count, sums)
    failing = sorted(set(residuals.failing) | {i for i, (u, s) in enumerate(zip(unrolled, sums)) if u != s})
    report = SumCheckReport(sums=sums, unrolled=unrolled, failing=failing,
                            singular=sorted(set(singular) | set(residuals.singular)))
    if failing:
        logger.warning("sum recurrence fails at indices %s", failing)
    return report


__all__ = [
    'certificate_term_value',
    'BoundaryRhs',
    'ct_to_sum_recurrence',
    'definite_sum',
    'SumCheckReport',
    'check_sum_recurrence',
]
