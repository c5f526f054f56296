"""
Telescopia - AZ Method
Ansatz-Verfahren: Telescoper fester Ordnung über einem linearen Gleichungssystem
"""

from __future__ import annotations

import logging
from typing import Any, Dict, List, Optional

from ...core.matrix import RatMatrix, mat_nullspace
from ...core.polynomial import MultiPoly, canonical_variables
from ...core.rational_function import RationalFunction
from ...core.univariate import field_ratio, from_field_poly, to_field_poly
from ...errors import DomainError
from ...ore.operator import OreAlgebraSpec, OreOperator
from .base_method import BaseTelescopingMethod, DiffTelescoperResult

logger = logging.getLogger(__name__)


def az_ct(f: RationalFunction, r: int, x: str = "x", y: str = "y",
          degree_slack: int = 1) -> Optional[DiffTelescoperResult]:
    """
    Telescoper der Ordnung <= r mit Zertifikat u/q^r, deg_y u <= s.

    Mit f = P + p/q (P Polynomanteil in y) gilt
    D_x^i(p/q) = p_i/q^{i+1}, p_{i+1} = q·∂_x p_i − (i+1)·p_i·∂_x q,
    und die Gleichung Σ c_i·p_i·q^{r−i} = ∂_y(u)·q − r·u·∂_y(q) ist linear
    in (c, u). s = deg_y p + (r−1)·deg_y q + degree_slack.

    Returns:
        DiffTelescoperResult oder None, wenn der Ansatz keine Lösung hat
    """
    if r < 0:
        raise DomainError(f"order must be non-negative, got {r}")
    variables = canonical_variables(f.variables + (x, y))
    numerator = to_field_poly(f.num, y, variables)
    denominator = to_field_poly(f.den, y, variables)
    poly_part, remainder = numerator.div(denominator)
    poly_integral = from_field_poly(poly_part.integrate(), variables)
    proper = field_ratio(remainder, denominator, variables)
    spec = OreAlgebraSpec.derivation(x)

    if proper.is_zero:
        return DiffTelescoperResult(OreOperator(spec, (1,)), poly_integral, y, method="az",
                                    metadata={'slack': degree_slack})

    p, q = proper.num, proper.den
    s = p.degree(y) + (r - 1) * q.degree(y) + degree_slack

    ps: List[MultiPoly] = [p]
    q_x = q.derivative(x)
    for i in range(r):
        ps.append(q * ps[i].derivative(x) - ps[i] * q_x * (i + 1))

    yv = MultiPoly.variable(y, variables)
    q_y = q.derivative(y)
    columns: List[MultiPoly] = [ps[i] * q ** (r - i) for i in range(r + 1)]
    for j in range(s + 1):
        column = yv ** j * q_y * r
        if j:
            column = column - yv ** (j - 1) * q * j
        columns.append(column)

    rows = max(col.degree(y) for col in columns) + 1
    column_coeffs = [col.coefficients_in(y) for col in columns]
    others = tuple(v for v in variables if v != y)
    zero = RationalFunction.constant(0)
    entries = [[RationalFunction(cc[e].lift(others)) if e in cc else zero for cc in column_coeffs]
               for e in range(max(rows, 0))]
    matrix = RatMatrix.from_rows(entries, cols=len(columns))
    logger.debug("az ansatz: r=%d, s=%d, system %dx%d", r, s, matrix.rows, matrix.cols)

    for vector in mat_nullspace(matrix):
        coeffs = vector[:r + 1]
        if all(c.is_zero for c in coeffs):
            continue
        u = RationalFunction.constant(0)
        for j, coeff in enumerate(vector[r + 1:]):
            if not coeff.is_zero:
                u = u + coeff * RationalFunction(yv ** j)
        certificate = u / RationalFunction(q ** r)
        derivative = poly_integral
        for i, c in enumerate(coeffs):
            if i:
                derivative = derivative.derivative(x)
            if not c.is_zero:
                certificate = certificate + c * derivative
        telescoper, factor = OreOperator(spec, coeffs).normalize()
        logger.info("az telescoper of order %d: %s", telescoper.order, telescoper)
        return DiffTelescoperResult(telescoper, factor * certificate, y, method="az",
                                    metadata={'slack': degree_slack, 'certificate_degree': s})
    return None


class AZMethod(BaseTelescopingMethod):
    """
    Ansatz-Verfahren

    Ohne feste Ordnung werden r = 0, 1, ... bis `max_order` (Standard: deg_y Nenner)
    probiert; für r >= deg_y q existiert stets eine Lösung.
    """

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        super().__init__("az", config)
        self.degree_slack = int(self.config.get('az_degree_slack', 1))

    def find_telescoper(self,
                        f: RationalFunction,
                        x: str,
                        y: str,
                        order: Optional[int] = None) -> Optional[DiffTelescoperResult]:
        if order is not None:
            return az_ct(f, order, x, y, self.degree_slack)
        max_order = int(self.config.get('az_max_order', f.den.degree(y)))
        for r in range(max_order + 1):
            result = az_ct(f, r, x, y, self.degree_slack)
            if result is not None:
                return result
        self.logger.info(f"az ansatz found no telescoper up to order {max_order}")
        return None
