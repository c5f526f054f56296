"""
Telescopia - Ordnung/Grad-Kurven
Minimaler Koeffizientengrad eines Telescopers in Abhängigkeit von der Ordnung
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import pandas as pd

from ..core.matrix import RatMatrix, mat_nullspace
from ..core.polynomial import MultiPoly, poly_lcm
from ..core.rational_function import RationalFunction
from ..errors import DomainError
from .methods.reduction_method import ReductionSequence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrderDegreePoint:
    """Telescoper der Ordnung <= order mit Koeffizientengrad <= degree existiert."""

    order: int
    degree: int

    def to_dict(self) -> Dict[str, int]:
        return {'order': self.order, 'degree': self.degree}


def _row_polynomials(vectors: Sequence[Tuple[RationalFunction, ...]], x: str) -> List[List[MultiPoly]]:
    """Je Koordinate j: Einträge aller Vektoren auf gemeinsamen Nenner gebracht."""
    if not vectors:
        return []
    dimension = len(vectors[0])
    rows = []
    for j in range(dimension):
        lcm = MultiPoly.one((x,))
        for vector in vectors:
            lcm = poly_lcm(lcm, vector[j].den)
        rows.append([(v[j].num * lcm.exact_div(v[j].den)).lift((x,)) for v in vectors])
    return rows


def minimal_degree(vectors: Sequence[Tuple[RationalFunction, ...]], d_cap: int, x: str) -> Optional[int]:
    """
    Kleinstes d <= d_cap, für das Σ_i c_i(x)·v_i = 0 mit deg c_i <= d lösbar ist.

    Unbekannte sind die rationalen Koeffizienten c_{i,e}; jede Koordinate liefert
    die Koeffizientenvergleiche in x.
    """
    rows = _row_polynomials(vectors, x)
    xv = MultiPoly.variable(x)
    for d in range(d_cap + 1):
        equations: List[List[int]] = []
        for row in rows:
            columns = [p * xv ** e for p in row for e in range(d + 1)]
            coeffs = [col.coefficients_in(x) for col in columns]
            top = max((col.degree(x) for col in columns), default=-1)
            for m in range(top + 1):
                equations.append([cc[m].value() if m in cc else 0 for cc in coeffs])
        size = len(vectors) * (d + 1)
        matrix = RatMatrix.from_rows(equations, cols=size)
        if mat_nullspace(matrix):
            return d
    return None


def order_degree_scan(f: RationalFunction, r_min: int, r_max: int, d_cap: int,
                      x: str = "x", y: str = "y", workers: int = 1) -> List[OrderDegreePoint]:
    """
    Für jede Ordnung r in [r_min, r_max] der minimale Grad d <= d_cap.

    Ordnungen ohne Telescoper bis d_cap fehlen in der Ausgabe.

    Args:
        f: rationale Funktion in genau x und y
        workers: Anzahl paralleler Threads für die Gradsuche
    """
    if r_min < 0 or r_max < r_min:
        raise DomainError(f"invalid order range [{r_min}, {r_max}]")
    extra = set(f.free_variables) - {x, y}
    if extra:
        raise DomainError(f"order-degree scan needs a function of {x}, {y} only; found {sorted(extra)}")

    sequence = ReductionSequence(f, x, y)
    for _ in range(r_max + 1):
        sequence.extend()
    vectors = list(sequence.vectors)

    def scan(r: int) -> Optional[OrderDegreePoint]:
        degree = minimal_degree(vectors[:r + 1], d_cap, x)
        return OrderDegreePoint(r, degree) if degree is not None else None

    orders = range(r_min, r_max + 1)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(scan, orders))
    else:
        results = [scan(r) for r in orders]
    points = [p for p in results if p is not None]
    logger.info("order-degree scan: %d of %d orders within degree %d", len(points), len(orders), d_cap)
    return points


def points_to_frame(points: Sequence[OrderDegreePoint]) -> pd.DataFrame:
    return pd.DataFrame([p.to_dict() for p in points], columns=['order', 'degree'])


def points_to_csv(points: Sequence[OrderDegreePoint]) -> str:
    """CSV mit Kopfzeile `order,degree`."""
    return points_to_frame(points).to_csv(index=False, lineterminator="\n")
