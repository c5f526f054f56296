"""
Telescopia - Ore-Operatoren
Schiebe- und Ableitungsoperatoren mit rationalen Koeffizienten
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from math import comb
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from ..core.polynomial import MultiPoly, poly_gcd_many
from ..core.rational_function import RationalFunction, common_denominator
from ..errors import AlgebraError, DomainError

logger = logging.getLogger(__name__)


class Generator(str, Enum):
    """Art des Erzeugers einer Ore-Algebra."""

    SHIFT = "shift"
    DERIVATION = "derivation"


@dataclass(frozen=True)
class OreAlgebraSpec:
    """
    Ore-Algebra über Q(var): S_var mit S·f(var) = f(var+1)·S bzw.
    D_var mit D·f = f·D + f'.
    """

    variable: str
    generator: Generator

    @property
    def symbol(self) -> str:
        prefix = "S" if self.generator is Generator.SHIFT else "D"
        return f"{prefix}{self.variable}"

    @classmethod
    def shift(cls, variable: str) -> "OreAlgebraSpec":
        return cls(variable, Generator.SHIFT)

    @classmethod
    def derivation(cls, variable: str) -> "OreAlgebraSpec":
        return cls(variable, Generator.DERIVATION)


Coefficient = Union[RationalFunction, MultiPoly, int]


@dataclass(frozen=True)
class OreOperator:
    """Σ coeffs[i]·∂^i, ohne verschwindende Koeffizienten am oberen Ende."""

    spec: OreAlgebraSpec
    coeffs: Tuple[RationalFunction, ...] = field(default_factory=tuple)

    def __post_init__(self):
        coeffs = [RationalFunction.coerce(c) for c in self.coeffs]
        while coeffs and coeffs[-1].is_zero:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def from_coefficients(cls, spec: OreAlgebraSpec, coeffs: Sequence[Coefficient]) -> "OreOperator":
        return cls(spec, tuple(coeffs))

    @classmethod
    def generator_power(cls, spec: OreAlgebraSpec, power: int = 1) -> "OreOperator":
        return cls(spec, tuple([0] * power + [1]))

    @property
    def order(self) -> int:
        """Ordnung; -1 für den Nulloperator."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> RationalFunction:
        if self.is_zero:
            raise DomainError("zero operator has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_polynomial(self) -> bool:
        return all(c.is_polynomial for c in self.coeffs)

    def polynomial_coefficients(self) -> Tuple[MultiPoly, ...]:
        return tuple(c.as_polynomial() for c in self.coeffs)

    def coefficient(self, i: int) -> RationalFunction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return RationalFunction.constant(0)

    # ------------------------------------------------------------------
    # Arithmetik
    # ------------------------------------------------------------------

    def _check(self, other: "OreOperator") -> None:
        if not isinstance(other, OreOperator):
            raise AlgebraError(f"cannot combine an operator with {type(other).__name__}")
        if other.spec != self.spec:
            raise AlgebraError(f"operators live in different algebras: {self.spec.symbol} vs {other.spec.symbol}")

    def __add__(self, other: "OreOperator") -> "OreOperator":
        self._check(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return OreOperator(self.spec, tuple(self.coefficient(i) + other.coefficient(i) for i in range(size)))

    def __neg__(self) -> "OreOperator":
        return OreOperator(self.spec, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "OreOperator") -> "OreOperator":
        return self + (-other)

    def __mul__(self, other: "OreOperator") -> "OreOperator":
        return ore_mul(self, other)

    def scale(self, factor: Coefficient) -> "OreOperator":
        """Linksmultiplikation mit einer rationalen Funktion."""
        factor = RationalFunction.coerce(factor)
        return OreOperator(self.spec, tuple(factor * c for c in self.coeffs))

    def apply(self, f: RationalFunction, other_vars_action: Optional[Mapping] = None) -> RationalFunction:
        return ore_apply(self, f, other_vars_action)

    def normalize(self) -> Tuple["OreOperator", RationalFunction]:
        return normalize_operator(self)

    def __str__(self) -> str:
        return format_operator(self)

    def to_dict(self) -> Dict[str, object]:
        return {
            'algebra': self.spec.symbol,
            'order': self.order,
            'coefficients': [str(c) for c in self.coeffs],
            'text': str(self),
        }


def ore_mul(a: OreOperator, b: OreOperator) -> OreOperator:
    """
    Produkt a·b in der Ore-Algebra.

    Shift: ∂^i·c = σ^i(c)·∂^i. Derivation: ∂^i·c = Σ_l C(i,l)·c^(l)·∂^(i-l).
    """
    a._check(b)
    if a.is_zero or b.is_zero:
        return OreOperator(a.spec)
    var = a.spec.variable
    zero = RationalFunction.constant(0)
    result: List[RationalFunction] = [zero] * (len(a.coeffs) + len(b.coeffs) - 1)

    if a.spec.generator is Generator.SHIFT:
        for i, ai in enumerate(a.coeffs):
            if ai.is_zero:
                continue
            for j, bj in enumerate(b.coeffs):
                if not bj.is_zero:
                    result[i + j] = result[i + j] + ai * bj.shift(var, i)
        return OreOperator(a.spec, tuple(result))

    # Ableitungen der rechten Koeffizienten werden nur einmal berechnet
    derivatives: List[List[RationalFunction]] = [[bj] for bj in b.coeffs]
    for i, ai in enumerate(a.coeffs):
        if ai.is_zero:
            continue
        for j, bj_derivs in enumerate(derivatives):
            while len(bj_derivs) <= i:
                bj_derivs.append(bj_derivs[-1].derivative(var))
            for l in range(i + 1):
                term = bj_derivs[l]
                if not term.is_zero:
                    result[i + j - l] = result[i + j - l] + ai * term * comb(i, l)
    return OreOperator(a.spec, tuple(result))


def ore_apply(op: OreOperator, f: RationalFunction,
              other_vars_action: Optional[Mapping] = None) -> RationalFunction:
    """
    Anwendung von `op` auf eine rationale Funktion.

    Args:
        op: Operator
        f: Funktion, darf weitere Variablen enthalten
        other_vars_action: Shift: Variable -> Offset, die gemeinsam mit `var`
            verschoben werden. Derivation: Variable -> dv/dvar (totale Ableitung).

    Returns:
        Σ c_i·∂^i(f)
    """
    var = op.spec.variable
    action = dict(other_vars_action or {})
    f = RationalFunction.coerce(f)

    def step(g: RationalFunction) -> RationalFunction:
        if op.spec.generator is Generator.SHIFT:
            g = g.shift(var, 1)
            for other, offset in action.items():
                g = g.shift(other, offset)
            return g
        result = g.derivative(var)
        for other, velocity in action.items():
            result = result + RationalFunction.coerce(velocity) * g.derivative(other)
        return result

    total = RationalFunction.constant(0)
    current = f
    for i, c in enumerate(op.coeffs):
        if i:
            current = step(current)
        if not c.is_zero:
            total = total + c * current
    return total


def normalize_operator(op: OreOperator) -> Tuple[OreOperator, RationalFunction]:
    """
    Nenner von links klären, durch den Inhalt teilen, positiver Leitinhalt.

    Returns:
        (normierter Operator, Faktor φ) mit normiert = φ·op
    """
    if op.is_zero:
        return op, RationalFunction.constant(1)
    lcm = common_denominator(list(op.coeffs))
    polys = [c.num * lcm.exact_div(c.den) for c in op.coeffs]
    content = poly_gcd_many(polys)
    factor = RationalFunction(lcm, content)
    if op.leading_coefficient.num.leading_coefficient() < 0:
        factor = -factor
    return op.scale(factor), factor


def format_linear_combination(coeffs: Sequence[RationalFunction], labels: Sequence[str]) -> str:
    """
    Σ coeffs[i]·labels[i] als Text, vom letzten Eintrag zum ersten.
    Ein leeres Label steht für den konstanten Summanden.
    """
    parts: List[Tuple[str, str]] = []
    for c, label in zip(reversed(coeffs), reversed(labels)):
        if c.is_zero:
            continue
        if c.is_constant:
            value = c.value()
            sign = "-" if value < 0 else "+"
            magnitude = abs(value)
            if not label:
                body = str(magnitude)
            elif magnitude == 1:
                body = label
            else:
                body = f"{magnitude}*{label}"
        else:
            sign = "+"
            body = f"({c})*{label}" if label else f"({c})"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def format_operator(op: OreOperator) -> str:
    """Textform, z.B. `(2*x)*Dx + 1` oder `Sn - 2`; Umkehrung von `parse_operator`."""
    symbol = op.spec.symbol
    labels = ["" if i == 0 else (symbol if i == 1 else f"{symbol}^{i}") for i in range(len(op.coeffs))]
    return format_linear_combination(op.coeffs, labels)


def parse_operator(text: str, spec: OreAlgebraSpec) -> OreOperator:
    """
    Liest die Textform eines Operators. Koeffizienten stehen links vom Erzeuger,
    z.B. `(1 - 2*x)*Dx - 2`.
    """
    from ..parsing.grammar import parse_expr
    from ..parsing.lowering import lower_rational

    variables = (spec.variable, spec.symbol)
    ast = parse_expr(text, variables)
    commutative = lower_rational(ast, variables)
    if spec.symbol in commutative.den.free_variables:
        raise DomainError(f"generator {spec.symbol} appears in a denominator: {text}")
    den = RationalFunction(commutative.den)
    coeffs = commutative.num.coefficients_in(spec.symbol)
    order = max(coeffs) if coeffs else -1
    result = []
    for i in range(order + 1):
        poly = coeffs.get(i)
        result.append(RationalFunction(poly) / den if poly is not None else RationalFunction.constant(0))
    return OreOperator(spec, tuple(RationalFunction.from_expr(c.to_expr(), (spec.variable,)) for c in result))


__all__ = [
    'Generator',
    'OreAlgebraSpec',
    'OreOperator',
    'ore_mul',
    'ore_apply',
    'normalize_operator',
    'format_operator',
    'format_linear_combination',
    'parse_operator',
]
