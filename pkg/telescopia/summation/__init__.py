"""
Telescopia Summation
Hypergeometrische Terme, Gosper, Zeilberger und Summenrekurrenzen
"""

from .hyperterm import GammaFactor, ProperTermExpr, HyperTerm, compile_proper_term, evaluate_term
from .gosper import (
    GPForm,
    GosperResult,
    gosper_petkovsek_form,
    gosper,
    verify_gosper,
    gosper_sum_values,
    brute_force_partial_sums,
)
from .zeilberger import ShiftTelescoperResult, zeilberger, verify_ct_shift
from .sum_recurrence import (
    BoundaryRhs,
    SumCheckReport,
    certificate_term_value,
    ct_to_sum_recurrence,
    definite_sum,
    check_sum_recurrence,
)

__all__ = [
    'GammaFactor',
    'ProperTermExpr',
    'HyperTerm',
    'compile_proper_term',
    'evaluate_term',
    'GPForm',
    'GosperResult',
    'gosper_petkovsek_form',
    'gosper',
    'verify_gosper',
    'gosper_sum_values',
    'brute_force_partial_sums',
    'ShiftTelescoperResult',
    'zeilberger',
    'verify_ct_shift',
    'BoundaryRhs',
    'SumCheckReport',
    'certificate_term_value',
    'ct_to_sum_recurrence',
    'definite_sum',
    'check_sum_recurrence',
]
