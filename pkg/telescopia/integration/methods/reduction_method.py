"""
Telescopia - Reduction Method
Reduktionsbasiertes kreatives Teleskopieren über Hermite-Reste
"""

from __future__ import annotations

import logging
from typing import Any, Dict, List, Optional, Tuple

from ...core.matrix import RatMatrix, mat_nullspace
from ...core.polynomial import MultiPoly, squarefree_part
from ...core.rational_function import RationalFunction
from ...errors import DomainError, NotFoundError
from ...ore.operator import OreAlgebraSpec, OreOperator
from ..hermite import hermite_reduce
from .base_method import BaseTelescopingMethod, DiffTelescoperResult

logger = logging.getLogger(__name__)


class ReductionSequence:
    """
    Folge D_x^i f = D_y(g_i) + h_i mit Koordinaten von h_i in der Basis y^j/q*.

    q* ist der quadratfreie Teil des Nenners von f in y; alle Reste h_i
    haben Nenner, die q* teilen, und liegen damit in einem Raum der Dimension deg_y q*.
    """

    def __init__(self, f: RationalFunction, x: str, y: str):
        self.f = f
        self.x = x
        self.y = y
        self.qstar: MultiPoly = squarefree_part(f.den, y)
        self.dimension = self.qstar.degree(y)
        self.g: List[RationalFunction] = []
        self.h: List[RationalFunction] = []
        self.vectors: List[Tuple[RationalFunction, ...]] = []

    def extend(self) -> Tuple[RationalFunction, ...]:
        """Berechnet (g_{i+1}, h_{i+1}) aus (g_i, h_i) und gibt den neuen Vektor zurück."""
        if not self.h:
            reduced = hermite_reduce(self.f, self.y)
            g = reduced.g
        else:
            reduced = hermite_reduce(self.h[-1].derivative(self.x), self.y)
            g = self.g[-1].derivative(self.x) + reduced.g
        self.g.append(g)
        self.h.append(reduced.h)
        vector = self._coordinates(reduced.h)
        self.vectors.append(vector)
        return vector

    def _coordinates(self, h: RationalFunction) -> Tuple[RationalFunction, ...]:
        scaled = h * RationalFunction(self.qstar)
        if self.y in scaled.den.free_variables:
            raise DomainError(f"remainder {h} does not lie over {self.qstar}")
        coeffs = scaled.num.coefficients_in(self.y)
        if coeffs and max(coeffs) >= self.dimension:
            raise DomainError(f"remainder {h} is not proper in {self.y}")
        den = RationalFunction(scaled.den)
        others = tuple(v for v in scaled.num.variables if v != self.y)
        zero = RationalFunction.constant(0)
        return tuple(RationalFunction(coeffs[j].lift(others)) / den if j in coeffs else zero
                     for j in range(self.dimension))


def reduction_ct(f: RationalFunction, x: str = "x", y: str = "y",
                 max_order: Optional[int] = None) -> DiffTelescoperResult:
    """
    Telescoper minimaler Ordnung über lineare Abhängigkeit der Hermite-Reste.

    Die Ordnung ist höchstens deg_y q* (Dimension des Restraums).

    Raises:
        NotFoundError: bei gesetztem max_order und keinem Telescoper bis dahin
    """
    sequence = ReductionSequence(f, x, y)
    limit = sequence.dimension if max_order is None else min(max_order, sequence.dimension)
    logger.info("reduction space of dimension %d", sequence.dimension)
    for r in range(limit + 1):
        sequence.extend()
        matrix = RatMatrix.from_columns(sequence.vectors, rows=sequence.dimension)
        basis = mat_nullspace(matrix)
        if not basis:
            continue
        coeffs = basis[0]
        certificate = RationalFunction.constant(0)
        for c, g in zip(coeffs, sequence.g):
            if not c.is_zero:
                certificate = certificate + c * g
        telescoper, factor = OreOperator(OreAlgebraSpec.derivation(x), coeffs).normalize()
        logger.info("reduction telescoper of order %d: %s", r, telescoper)
        return DiffTelescoperResult(telescoper, factor * certificate, y, method="reduction",
                                    metadata={'dimension': sequence.dimension})
    raise NotFoundError(limit)


class ReductionMethod(BaseTelescopingMethod):
    """
    Reduktionsbasiertes Verfahren

    Liefert stets einen Telescoper minimaler Ordnung.
    """

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        super().__init__("reduction", config)

    def find_telescoper(self,
                        f: RationalFunction,
                        x: str,
                        y: str,
                        order: Optional[int] = None) -> Optional[DiffTelescoperResult]:
        try:
            return reduction_ct(f, x, y, max_order=order)
        except NotFoundError:
            self.logger.info(f"no telescoper of order <= {order}")
            return None
