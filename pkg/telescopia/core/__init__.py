"""
Telescopia Core
Exakte Arithmetik: Polynome, rationale Funktionen, Matrizen
"""

from .polynomial import (
    MultiPoly,
    squarefree_part,
    content_in,
    poly_gcd,
    poly_lcm,
    poly_add,
    poly_sub,
    poly_mul,
    poly_exact_divide,
)
from .rational_function import RationalFunction, normalize, common_denominator
from .matrix import RatMatrix, mat_nullspace

__all__ = [
    'MultiPoly',
    'RationalFunction',
    'RatMatrix',
    'mat_nullspace',
    'normalize',
    'common_denominator',
    'squarefree_part',
    'content_in',
    'poly_gcd',
    'poly_lcm',
    'poly_add',
    'poly_sub',
    'poly_mul',
    'poly_exact_divide',
]
