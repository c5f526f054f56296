"""
Telescopia - Rekurrenzen
P-rekursive Rekurrenzen: Umwandlung aus Differentialoperatoren, Abrollen, Prüfen
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from sympy import Rational

from ..core.polynomial import MultiPoly
from ..core.rational_function import RationalFunction
from ..errors import AlgebraError, DomainError, SingularIndexError
from .operator import Generator, OreAlgebraSpec, OreOperator, format_linear_combination

logger = logging.getLogger(__name__)

Oracle = Union[Callable[[int], Rational], Sequence[Rational]]


@dataclass(frozen=True)
class Recurrence:
    """
    Σ_i c_i(n)·a(n+i) = G(n) mit polynomialen c_i.

    Ohne `inhomogeneous_rhs` ist die Rekurrenz homogen.
    """

    operator: OreOperator
    inhomogeneous_rhs: Optional[Callable[[int], Rational]] = field(default=None, compare=False)

    def __post_init__(self):
        if self.operator.spec.generator is not Generator.SHIFT:
            raise AlgebraError("a recurrence needs a shift operator")
        if self.operator.is_zero:
            raise DomainError("the zero operator is not a recurrence")
        if not self.operator.is_polynomial:
            raise DomainError(f"recurrence coefficients must be polynomials: {self.operator}")

    @classmethod
    def from_operator(cls, operator: OreOperator,
                      inhomogeneous_rhs: Optional[Callable[[int], Rational]] = None) -> "Recurrence":
        """Homogene Operatoren werden normiert; inhomogene müssen schon polynomial sein."""
        if inhomogeneous_rhs is None:
            operator, _ = operator.normalize()
        return cls(operator, inhomogeneous_rhs)

    @property
    def index(self) -> str:
        return self.operator.spec.variable

    @property
    def order(self) -> int:
        return self.operator.order

    @property
    def coefficients(self) -> Tuple[MultiPoly, ...]:
        return self.operator.polynomial_coefficients()

    def coefficient_values(self, n: int) -> List[Rational]:
        return [c.evaluate({self.index: n}).value() for c in self.coefficients]

    def rhs(self, n: int) -> Rational:
        if self.inhomogeneous_rhs is None:
            return Rational(0)
        return Rational(self.inhomogeneous_rhs(n))

    def residual(self, values: Sequence[Rational], n: int) -> Rational:
        """Σ c_i(n)·values[n+i] − G(n)."""
        coeffs = self.coefficient_values(n)
        return sum((c * values[n + i] for i, c in enumerate(coeffs) if c != 0), Rational(0)) - self.rhs(n)

    def __str__(self) -> str:
        return format_recurrence(self)

    def to_dict(self) -> Dict[str, object]:
        return {
            'index': self.index,
            'order': self.order,
            'coefficients': [str(c) for c in self.coefficients],
            'homogeneous': self.inhomogeneous_rhs is None,
            'text': str(self),
        }


def format_recurrence(rec: Recurrence, sequence: str = "a") -> str:
    n = rec.index
    labels = [f"{sequence}({n})" if i == 0 else f"{sequence}({n}+{i})" for i in range(rec.order + 1)]
    lhs = format_linear_combination(rec.operator.coeffs, labels)
    return f"{lhs} = {'0' if rec.inhomogeneous_rhs is None else f'G({n})'}"


def _falling(base: MultiPoly, length: int) -> MultiPoly:
    result = MultiPoly.one(base.variables)
    for j in range(length):
        result = result * (base - j)
    return result


def ode_to_rec(operator: OreOperator, index: str = "n") -> Recurrence:
    """
    Rekurrenz für die Taylor-Koeffizienten jeder Potenzreihenlösung von L·f = 0.

    x^a·D^b bildet a(j) auf ff(j, b)·a(j) mit Verschiebung s = b − a ab; die
    Rekurrenz ist auf den kleinsten Shift normiert und gilt für alle n >= 0.

    Args:
        operator: Differentialoperator mit polynomialen Koeffizienten in x
        index: Name des Rekurrenzindex

    Returns:
        Homogene, normierte Rekurrenz
    """
    if operator.spec.generator is not Generator.DERIVATION:
        raise AlgebraError("ode_to_rec needs a differential operator")
    if operator.is_zero:
        raise DomainError("the zero operator has no recurrence")
    normalized, _ = operator.normalize()
    x = operator.spec.variable

    pieces: List[Tuple[int, int, MultiPoly]] = []
    for b, coeff in enumerate(normalized.coeffs):
        for a, c in coeff.num.coefficients_in(x).items():
            pieces.append((b - a, b, c.lift(v for v in c.variables if v != x)))
    s_min = min(s for s, _, _ in pieces)

    n = MultiPoly.variable(index)
    contributions: Dict[int, MultiPoly] = {}
    for s, b, c in pieces:
        shift = s - s_min
        term = c * _falling(n + shift, b)
        contributions[shift] = contributions[shift] + term if shift in contributions else term

    size = max(contributions) + 1
    coeffs = tuple(RationalFunction(contributions.get(i, MultiPoly.zero((index,)))) for i in range(size))
    rec_op = OreOperator(OreAlgebraSpec.shift(index), coeffs)
    if rec_op.is_zero:
        raise DomainError(f"{operator} annihilates every power series; no recurrence")
    logger.debug("ode_to_rec: %s -> shift range [%d, %d]", operator, s_min, s_min + size - 1)
    return Recurrence.from_operator(rec_op)


def rec_unroll(rec: Recurrence, initial: Sequence, count: int) -> List[Rational]:
    """
    Werte a(0..count-1) aus a(n+r) = (G(n) − Σ_{i<r} c_i(n)·a(n+i)) / c_r(n).

    Raises:
        SingularIndexError: c_r(n) = 0 beim Abrollen
    """
    order = rec.order
    if len(initial) < order:
        raise DomainError(f"recurrence of order {order} needs {order} initial values, got {len(initial)}")
    values = [Rational(v) for v in initial]
    while len(values) < count:
        n = len(values) - order
        coeffs = rec.coefficient_values(n)
        if coeffs[order] == 0:
            raise SingularIndexError(n)
        acc = rec.rhs(n) - sum((c * values[n + i] for i, c in enumerate(coeffs[:order]) if c != 0), Rational(0))
        values.append(acc / coeffs[order])
    return values[:count]


def _oracle_value(oracle: Oracle, index: int) -> Rational:
    if callable(oracle):
        return Rational(oracle(index))
    return Rational(oracle[index])


def rec_unroll_with_oracle(rec: Recurrence, count: int, oracle: Oracle) -> Tuple[List[Rational], List[int]]:
    """
    Abrollen, wobei Startwerte und Werte an singulären Indizes aus `oracle` kommen.

    Returns:
        (Werte a(0..count-1), Liste der singulären Indizes n)
    """
    order = rec.order
    values = [_oracle_value(oracle, i) for i in range(min(order, count))]
    singular: List[int] = []
    while len(values) < count:
        n = len(values) - order
        coeffs = rec.coefficient_values(n)
        if coeffs[order] == 0:
            singular.append(n)
            values.append(_oracle_value(oracle, n + order))
            continue
        acc = rec.rhs(n) - sum((c * values[n + i] for i, c in enumerate(coeffs[:order]) if c != 0), Rational(0))
        values.append(acc / coeffs[order])
    if singular:
        logger.warning("leading coefficient vanishes at n=%s; oracle values used", singular)
    return values, singular


@dataclass
class RecurrenceCheck:
    """Ergebnis der Prüfung einer Rekurrenz gegen eine Folge."""

    checked: int = 0
    failing: List[int] = field(default_factory=list)
    singular: List[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failing

    def to_dict(self) -> Dict[str, object]:
        return {'checked': self.checked, 'failing': list(self.failing), 'singular': list(self.singular)}


def check_recurrence(rec: Recurrence, values: Sequence[Rational]) -> RecurrenceCheck:
    """Setzt die Folge für alle n mit n + order < len(values) ein."""
    result = RecurrenceCheck()
    for n in range(len(values) - rec.order):
        if rec.coefficient_values(n)[rec.order] == 0:
            result.singular.append(n)
        if rec.residual(values, n) != 0:
            result.failing.append(n)
        result.checked += 1
    return result


__all__ = [
    'Recurrence',
    'RecurrenceCheck',
    'format_recurrence',
    'ode_to_rec',
    'rec_unroll',
    'rec_unroll_with_oracle',
    'check_recurrence',
]
