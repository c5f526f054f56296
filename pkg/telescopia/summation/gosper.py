"""
Telescopia - Gosper
Gosper-Petkovšek-Normalform, parametrisierte Gosper-Gleichung und unbestimmte Summation
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import reduce
from typing import Dict, List, Optional, Sequence, Set, Tuple

import sympy
from sympy import Rational, Symbol

from ..core.matrix import RatMatrix, mat_nullspace
from ..core.polynomial import MultiPoly, content_in, poly_gcd
from ..core.rational_function import RationalFunction
from ..core.univariate import integer_roots, leading_in
from ..errors import DomainError, VerificationError
from .hyperterm import HyperTerm, evaluate_term

logger = logging.getLogger(__name__)

_DISPERSION = "_h"


@dataclass(frozen=True)
class GPForm:
    """r(k) = z·a(k)/b(k)·c(k+1)/c(k) mit ggT(a(k), b(k+j)) = 1 für alle j >= 0."""

    z: RationalFunction
    a: MultiPoly
    b: MultiPoly
    c: MultiPoly

    def ratio(self, var: str) -> RationalFunction:
        return self.z * RationalFunction(self.a, self.b) * RationalFunction(self.c.shift(var, 1), self.c)


@dataclass(frozen=True)
class GosperResult:
    """Zertifikat y mit y(k+1)·r(k) − y(k) = 1, also g = y·f und g(k+1) − g(k) = f(k)."""

    certificate: RationalFunction
    variable: str

    def to_dict(self) -> Dict[str, object]:
        return {'summable': True, 'variable': self.variable, 'certificate': str(self.certificate)}


def dispersion_set(a: MultiPoly, b: MultiPoly, var: str) -> List[int]:
    """
    Alle j >= 0 mit nichttrivialem ggT(a(var), b(var+j)), als ganzzahlige
    Nullstellen der Resultante Res_var(a(var), b(var+h)) in h.

    a und b dürfen weitere Variablen als Parameter enthalten; die Nullstellen
    müssen für alle Parameterwerte gelten.
    """
    if a.degree(var) <= 0 or b.degree(var) <= 0:
        return []
    sym, h = Symbol(var), Symbol(_DISPERSION)
    res = sympy.resultant(a.to_expr(), b.to_expr().xreplace({sym: sym + h}), sym)
    params = tuple(v for v in a.variables + b.variables if v != var)
    res_poly = MultiPoly.from_expr(sympy.expand(res), params + (_DISPERSION,))
    if res_poly.is_zero:
        raise DomainError(f"{a} and {b} share a factor free of {var}")

    # Koeffizienten in den Parametern: gemeinsame Nullstellen in h
    groups: Dict[Tuple, Dict] = {}
    h_index = res_poly.variables.index(_DISPERSION)
    for exp, coeff in res_poly.terms.items():
        key = exp[:h_index] + exp[h_index + 1:]
        groups.setdefault(key, {})[(exp[h_index],)] = coeff
    univariate = [MultiPoly.from_terms(t, (_DISPERSION,)) for t in groups.values()]
    common = reduce(poly_gcd, univariate)
    roots = [r for r in integer_roots(common, _DISPERSION) if r >= 0] if common.degree(_DISPERSION) > 0 else []
    logger.debug("dispersion set of (%s, %s) in %s: %s", a, b, var, roots)
    return roots


def gosper_petkovsek_form(r: RationalFunction, var: str) -> GPForm:
    """
    Gosper-Petkovšek-Form des rationalen Schiebequotienten r.

    Der von `var` freie Inhalt von Zähler und Nenner wandert in z.
    """
    if r.is_zero:
        raise DomainError("Gosper-Petkovšek form of the zero function")
    num_content, a = content_in(r.num, var)
    den_content, b = content_in(r.den, var)
    z = RationalFunction(num_content, den_content)
    c = MultiPoly.one(a.variables)
    for j in dispersion_set(a, b, var):
        d = a.gcd(b.shift(var, j))
        if d.degree(var) <= 0:
            continue
        a = a.exact_div(d)
        b = b.exact_div(d.shift(var, -j))
        for i in range(1, j + 1):
            c = c * d.shift(var, -i)
    return GPForm(z, a, b, c)


def _degree_bound(A: MultiPoly, B: MultiPoly, rhs_degree: int, var: str) -> int:
    """Gradschranke für x in A·x(k+1) − B·x(k) = rhs; -1 wenn nur x = 0 möglich ist."""
    N, lc_a = leading_in(A, var)
    M, lc_b = leading_in(B, var)
    K = rhs_degree
    if N != M or lc_a != lc_b:
        candidates = {K - max(N, M)}
    elif N == 0:
        candidates = {K - N + 1, 0}
    else:
        coeffs_a = A.coefficients_in(var)
        coeffs_b = B.coefficients_in(var)
        zero = MultiPoly.zero(A.variables)
        diff = RationalFunction(coeffs_b.get(N - 1, zero) - coeffs_a.get(N - 1, zero), lc_a)
        candidates = {K - N + 1}
        if diff.is_constant and diff.value().is_integer:
            candidates.add(int(diff.value()))
    valid = [d for d in candidates if d >= 0]
    bound = max(valid) if valid else -1
    logger.debug("degree bound: N=%d M=%d K=%d -> %d", N, M, K, bound)
    return bound


def solve_parameterized_gosper(A: MultiPoly, B: MultiPoly, rhs: Sequence[MultiPoly],
                               var: str) -> Optional[Tuple[Tuple[RationalFunction, ...], RationalFunction]]:
    """
    Löst A·x(k+1) − B·x(k) = Σ λ_i·rhs_i mit polynomialem x und nicht allen λ_i = 0.

    Die übrigen Variablen sind Parameter; λ_i und die Koeffizienten von x
    liegen in deren Funktionenkörper.

    Returns:
        (λ, x) oder None
    """
    rhs_degree = max((p.degree(var) for p in rhs), default=-1)
    d = _degree_bound(A, B, rhs_degree, var)
    k = MultiPoly.variable(var)
    columns: List[MultiPoly] = [-p for p in rhs]
    for j in range(d + 1):
        power = k ** j
        columns.append(A * power.shift(var, 1) - B * power)

    rows = max((col.degree(var) for col in columns), default=-1) + 1
    column_coeffs = [col.coefficients_in(var) for col in columns]
    entries = []
    for e in range(rows):
        entries.append([RationalFunction(cc[e].lift(v for v in cc[e].variables if v != var)) if e in cc
                        else RationalFunction.constant(0) for cc in column_coeffs])
    matrix = RatMatrix.from_rows(entries, cols=len(columns))
    for vector in mat_nullspace(matrix):
        lambdas = vector[:len(rhs)]
        if all(l.is_zero for l in lambdas):
            continue
        x = RationalFunction.constant(0)
        for j, coeff in enumerate(vector[len(rhs):]):
            x = x + coeff * RationalFunction(k ** j)
        return tuple(lambdas), x
    return None


def gosper(r: RationalFunction, var: str = "k") -> Optional[GosperResult]:
    """
    Gosper-Entscheidung für den Schiebequotienten r = f(k+1)/f(k).

    Args:
        r: rationaler Schiebequotient (weitere Variablen sind Parameter)
        var: Summationsvariable

    Returns:
        GosperResult oder None, wenn f nicht Gosper-summierbar ist
    """
    form = gosper_petkovsek_form(r, var)
    A = form.z.num * form.a
    B = form.z.den * form.b.shift(var, -1)
    solution = solve_parameterized_gosper(A, B, [form.z.den * form.c], var)
    if solution is None:
        logger.info("term with shift quotient %s is not Gosper-summable", r)
        return None
    (lam,), x = solution
    x = x / lam
    certificate = RationalFunction(form.b.shift(var, -1)) * x / RationalFunction(form.c)
    result = GosperResult(certificate, var)
    if not verify_gosper(r, result):
        raise VerificationError(f"Gosper certificate {certificate} does not verify")
    return result


def verify_gosper(r: RationalFunction, result: GosperResult) -> bool:
    """y(k+1)·r(k) − y(k) = 1."""
    y = result.certificate
    return y.shift(result.variable, 1) * r - y == 1


def gosper_sum_values(f: HyperTerm, result: GosperResult, upto: int) -> List[Rational]:
    """
    Partialsummen Σ_{k=0}^{m} f(k) = g(m+1) − g(0) für m = 0..upto, mit g = y·f.

    `f` ist ein Term nur in k (ρ_n = 1).
    """
    from .sum_recurrence import certificate_term_value

    start = certificate_term_value(f, result.certificate, 0, 0)
    return [certificate_term_value(f, result.certificate, 0, m + 1) - start for m in range(upto + 1)]


def brute_force_partial_sums(f: HyperTerm, upto: int) -> List[Rational]:
    total = Rational(0)
    sums = []
    for m in range(upto + 1):
        total += evaluate_term(f, 0, m)
        sums.append(total)
    return sums


__all__ = [
    'GPForm',
    'GosperResult',
    'dispersion_set',
    'gosper_petkovsek_form',
    'solve_parameterized_gosper',
    'gosper',
    'verify_gosper',
    'gosper_sum_values',
    'brute_force_partial_sums',
]
