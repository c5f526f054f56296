"""
Telescopia - Hypergeometrische Terme
Eigentliche hypergeometrische Terme, Schiebequotienten und exakte Auswertung
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from sympy import Rational, factorial, rf

from ..core.polynomial import MultiPoly
from ..core.rational_function import RationalFunction
from ..errors import DomainError, PoleError

logger = logging.getLogger(__name__)


def rising(a: RationalFunction, m: int) -> RationalFunction:
    """Γ(a+m)/Γ(a) als rationale Funktion, auch für negatives m."""
    result = RationalFunction.constant(1, a.variables)
    if m >= 0:
        for j in range(m):
            result = result * (a + j)
        return result
    for j in range(1, -m + 1):
        result = result * (a - j)
    return 1 / result


@dataclass(frozen=True)
class GammaFactor:
    """Γ(α·n + β·k + γ)^e mit ganzzahligen α, β."""

    alpha: int
    beta: int
    gamma: Rational
    exponent: int

    def argument_value(self, n0: int, k0: int) -> Rational:
        return self.alpha * n0 + self.beta * k0 + Rational(self.gamma)

    def argument(self, variables: Tuple[str, str]) -> RationalFunction:
        n, k = variables
        arg = MultiPoly.from_terms({(1, 0): self.alpha, (0, 1): self.beta, (0, 0): self.gamma}, (n, k))
        return RationalFunction(arg)

    def __str__(self) -> str:
        text = f"gamma({self.argument(('n', 'k'))})"
        return text if self.exponent == 1 else f"{text}^{self.exponent}"


@dataclass(frozen=True)
class ProperTermExpr:
    """
    p(n,k)·c^n·d^k·Π Γ(α_i·n + β_i·k + γ_i)^{e_i}

    Faktoren mit nicht ganzzahligem γ werden durch Γ(γ) normiert; der Term ist
    nur bis auf diese Konstante dargestellt.
    """

    polynomial: MultiPoly
    c: Rational = Rational(1)
    d: Rational = Rational(1)
    gamma_factors: Tuple[GammaFactor, ...] = ()
    variables: Tuple[str, str] = ("n", "k")

    def __post_init__(self):
        if self.polynomial.is_zero:
            raise DomainError("the polynomial factor of a proper term must be nonzero")
        if Rational(self.c) == 0 or Rational(self.d) == 0:
            raise DomainError("geometric bases of a proper term must be nonzero")
        if set(self.polynomial.free_variables) - set(self.variables):
            raise DomainError(f"polynomial {self.polynomial} uses variables outside {self.variables}")

    def shift_quotients(self) -> Tuple[RationalFunction, RationalFunction]:
        """(f(n+1,k)/f(n,k), f(n,k+1)/f(n,k))."""
        n, k = self.variables
        p = RationalFunction(self.polynomial.lift(self.variables))
        rho_n = p.shift(n, 1) / p * Rational(self.c)
        rho_k = p.shift(k, 1) / p * Rational(self.d)
        for gf in self.gamma_factors:
            arg = gf.argument(self.variables)
            rho_n = rho_n * rising(arg, gf.alpha) ** gf.exponent
            rho_k = rho_k * rising(arg, gf.beta) ** gf.exponent
        return rho_n, rho_k

    def evaluate(self, n0: int, k0: int) -> Rational:
        """
        Exakter Wert mit der Grenzwertkonvention Γ(−m+ε) ≈ (−1)^m/(m!·ε),
        alle Argumente mit demselben ε gestört.

        Raises:
            PoleError: Netto-Polordnung > 0
        """
        n, k = self.variables
        value = self.polynomial.evaluate({n: n0, k: k0}).value()
        value *= Rational(self.c) ** n0 * Rational(self.d) ** k0
        order = 0
        for gf in self.gamma_factors:
            arg = gf.argument_value(n0, k0)
            if arg.is_integer:
                if arg <= 0:
                    m = -int(arg)
                    order -= gf.exponent
                    value *= (Rational((-1) ** m) / factorial(m)) ** gf.exponent
                else:
                    value *= factorial(int(arg) - 1) ** gf.exponent
            else:
                value *= rf(Rational(gf.gamma), int(arg - Rational(gf.gamma))) ** gf.exponent
        if order > 0:
            return Rational(0)
        if order < 0:
            raise PoleError(f"{self} has a pole at n={n0}, k={k0}", point={n: n0, k: k0})
        return Rational(value)

    def __str__(self) -> str:
        n, k = self.variables
        parts = []
        if self.polynomial != 1:
            parts.append(f"({self.polynomial})")
        if Rational(self.c) != 1:
            parts.append(f"({self.c})^{n}")
        if Rational(self.d) != 1:
            parts.append(f"({self.d})^{k}")
        parts.extend(str(gf) for gf in self.gamma_factors)
        return "*".join(parts) or "1"


@dataclass(frozen=True)
class HyperTerm:
    """
    Hypergeometrischer Term in (n, k), gegeben durch seine Schiebequotienten
    und den Wert f(0,0). `source` erlaubt die exakte Auswertung.
    """

    rho_n: RationalFunction
    rho_k: RationalFunction
    base: Rational = Rational(1)
    variables: Tuple[str, str] = ("n", "k")
    source: Optional[ProperTermExpr] = field(default=None, compare=False)

    def __post_init__(self):
        if self.rho_n.is_zero or self.rho_k.is_zero:
            raise DomainError("shift quotients of a hypergeometric term must be nonzero")
        if not self.is_compatible():
            raise DomainError(f"incompatible shift quotients {self.rho_n}, {self.rho_k}")

    @classmethod
    def univariate(cls, rho_k: RationalFunction, base=1, variables: Tuple[str, str] = ("n", "k")) -> "HyperTerm":
        """Term nur in k (ρ_n = 1)."""
        return cls(RationalFunction.constant(1), rho_k, Rational(base), variables)

    def is_compatible(self) -> bool:
        """ρ_n(n,k+1)·ρ_k(n,k) = ρ_k(n+1,k)·ρ_n(n,k)."""
        n, k = self.variables
        return self.rho_n.shift(k, 1) * self.rho_k == self.rho_k.shift(n, 1) * self.rho_n

    def ratio_n(self, i: int) -> RationalFunction:
        """f(n+i,k)/f(n,k) = Π_{j<i} ρ_n(n+j,k)."""
        n, _ = self.variables
        result = RationalFunction.constant(1)
        for j in range(i):
            result = result * self.rho_n.shift(n, j)
        return result

    def to_dict(self) -> Dict[str, object]:
        return {
            'variables': list(self.variables),
            'rho_n': str(self.rho_n),
            'rho_k': str(self.rho_k),
            'base': str(self.base),
            'source': str(self.source) if self.source is not None else None,
        }


def compile_proper_term(term: ProperTermExpr) -> HyperTerm:
    """
    Schiebequotienten eines eigentlichen Terms.

    Raises:
        PoleError: Term ist bei (0,0) nicht definiert
    """
    if any(not Rational(gf.gamma).is_integer for gf in term.gamma_factors):
        logger.warning("gamma factors with non-integer offset are normalised by gamma(offset): %s", term)
    rho_n, rho_k = term.shift_quotients()
    base = term.evaluate(0, 0)
    return HyperTerm(rho_n, rho_k, base, term.variables, source=term)


def _step(rho: RationalFunction, point: Dict[str, int]) -> Rational:
    den = rho.den.evaluate(point)
    if den.is_zero:
        raise PoleError(f"shift quotient {rho} has a pole at {point}", point=point)
    return rho.num.evaluate(point).value() / den.value()


def evaluate_term(f: HyperTerm, n0: int, k0: int) -> Rational:
    """
    f(n0, k0) für n0, k0 >= 0.

    Mit `source` exakt über die Γ-Darstellung, sonst als Produkt der
    Schiebequotienten entlang (0,0) -> (n0,0) -> (n0,k0).

    Raises:
        PoleError: ein Quotient auf dem Weg hat einen Pol
    """
    if n0 < 0 or k0 < 0:
        raise DomainError(f"evaluate_term needs non-negative indices, got ({n0}, {k0})")
    if f.source is not None:
        return f.source.evaluate(n0, k0)
    n, k = f.variables
    value = Rational(f.base)
    for j in range(n0):
        value *= _step(f.rho_n, {n: j, k: 0})
    for j in range(k0):
        value *= _step(f.rho_k, {n: n0, k: j})
    return value


__all__ = [
    'GammaFactor',
    'ProperTermExpr',
    'HyperTerm',
    'compile_proper_term',
    'evaluate_term',
    'rising',
]
