"""
Telescopia - Matrizen
Matrizen über Q(x1..xm) und Nullraumberechnung (bruchfreie Bareiss-Elimination)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple

from sympy import Rational

from ..errors import DomainError
from .polynomial import MultiPoly, canonical_variables, poly_gcd_many, poly_lcm, rational_content
from .rational_function import RationalFunction, common_denominator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RatMatrix:
    """Rechteckige Matrix mit Einträgen aus Q(x1..xm)."""

    rows: int
    cols: int
    entries: Tuple[Tuple[RationalFunction, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(row) != self.cols for row in self.entries):
            raise DomainError(f"matrix shape {self.rows}x{self.cols} does not match its entries")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int = None) -> "RatMatrix":
        entries = tuple(tuple(RationalFunction.coerce(e) for e in row) for row in rows)
        if cols is None:
            if not entries:
                raise DomainError("column count of an empty matrix must be given")
            cols = len(entries[0])
        return cls(len(entries), cols, entries)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "RatMatrix":
        return cls.from_rows([[col[i] for col in columns] for i in range(rows)], cols=len(columns))

    @property
    def variables(self) -> Tuple[str, ...]:
        names: Tuple[str, ...] = ()
        for row in self.entries:
            for entry in row:
                names += entry.variables
        return canonical_variables(names)

    @property
    def is_constant(self) -> bool:
        return all(entry.is_constant for row in self.entries for entry in row)

    def apply(self, vector: Sequence[RationalFunction]) -> Tuple[RationalFunction, ...]:
        if len(vector) != self.cols:
            raise DomainError("vector length does not match column count")
        result = []
        for row in self.entries:
            acc = RationalFunction.constant(0)
            for entry, value in zip(row, vector):
                if not entry.is_zero:
                    acc = acc + entry * value
            result.append(acc)
        return tuple(result)


def _bareiss_echelon(rows: List[list], cols: int, exquo: Callable) -> Tuple[List[list], List[int]]:
    """
    Bruchfreie Zeilenstufenform. Alle Divisionen sind exakt.

    Returns:
        (Stufenzeilen, Pivotspalten)
    """
    rows = [list(r) for r in rows]
    pivots: List[int] = []
    previous = None
    rank = 0
    for col in range(cols):
        pivot_row = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pivot = rows[rank][col]
        for i in range(rank + 1, len(rows)):
            factor = rows[i][col]
            updated = []
            for j in range(cols):
                value = pivot * rows[i][j] - factor * rows[rank][j]
                if previous is not None and value:
                    value = exquo(value, previous)
                updated.append(value)
            rows[i] = updated
        previous = pivot
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return rows[:rank], pivots


def _clear_vector_polynomial(vector: List[RationalFunction]) -> Tuple[RationalFunction, ...]:
    """Polynomeinträge, Inhalt 1, erster nichtverschwindender Eintrag mit positivem Leitkoeffizienten."""
    lcm = common_denominator(vector)
    polys = [v.num * lcm.exact_div(v.den) for v in vector]
    content = poly_gcd_many(polys)
    polys = [p.exact_div(content) for p in polys]
    first = next(p for p in polys if not p.is_zero)
    if first.leading_coefficient() < 0:
        polys = [-p for p in polys]
    return tuple(RationalFunction(p) for p in polys)


def _nullspace_polynomial(matrix: RatMatrix) -> List[Tuple[RationalFunction, ...]]:
    variables = matrix.variables
    rows = []
    for row in matrix.entries:
        if all(e.is_zero for e in row):
            continue
        lcm = common_denominator(list(row))
        rows.append([e.num.lift(variables) * lcm.exact_div(e.den).lift(variables) for e in row])
    echelon, pivots = _bareiss_echelon(rows, matrix.cols, lambda a, b: a.exact_div(b))
    logger.debug("Bareiss elimination: %d x %d, rank %d", matrix.rows, matrix.cols, len(pivots))

    basis = []
    for free in (c for c in range(matrix.cols) if c not in pivots):
        vector = [RationalFunction.constant(0, variables) for _ in range(matrix.cols)]
        vector[free] = RationalFunction.constant(1, variables)
        for r in reversed(range(len(pivots))):
            p = pivots[r]
            acc = RationalFunction.constant(0, variables)
            for j in range(p + 1, matrix.cols):
                if echelon[r][j] and not vector[j].is_zero:
                    acc = acc + RationalFunction(echelon[r][j]) * vector[j]
            vector[p] = -acc / RationalFunction(echelon[r][p])
        basis.append(_clear_vector_polynomial(vector))
    return basis


def _nullspace_rational(matrix: RatMatrix) -> List[Tuple[RationalFunction, ...]]:
    rows = []
    for row in matrix.entries:
        values = [e.value() for e in row]
        if not any(values):
            continue
        scale = 1 / rational_content(values)
        rows.append([int(v * scale) for v in values])
    echelon, pivots = _bareiss_echelon(rows, matrix.cols, lambda a, b: a // b)
    logger.debug("integer Bareiss elimination: %d x %d, rank %d", matrix.rows, matrix.cols, len(pivots))

    basis = []
    for free in (c for c in range(matrix.cols) if c not in pivots):
        vector = [Rational(0)] * matrix.cols
        vector[free] = Rational(1)
        for r in reversed(range(len(pivots))):
            p = pivots[r]
            acc = sum((echelon[r][j] * vector[j] for j in range(p + 1, matrix.cols)), Rational(0))
            vector[p] = -acc / echelon[r][p]
        scale = 1 / rational_content(vector)
        first = next(v for v in vector if v != 0)
        if first < 0:
            scale = -scale
        basis.append(tuple(RationalFunction.constant(v * scale) for v in vector))
    return basis


def mat_nullspace(matrix: RatMatrix) -> List[Tuple[RationalFunction, ...]]:
    """
    Basis des rechten Nullraums.

    Jeder Basisvektor hat polynomiale Einträge mit Inhalt 1 und einen ersten
    nichtverschwindenden Eintrag mit positivem Leitkoeffizienten. Die Basis
    ist für eine gegebene Matrix deterministisch (eine Spalte pro freier Variable).

    Args:
        matrix: Matrix über Q(x1..xm)

    Returns:
        Liste von Vektoren der Länge `matrix.cols`
    """
    if matrix.cols == 0:
        return []
    if matrix.is_constant:
        return _nullspace_rational(matrix)
    return _nullspace_polynomial(matrix)


__all__ = ['RatMatrix', 'mat_nullspace']
