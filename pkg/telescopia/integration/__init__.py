"""
Telescopia Integration
Hermite-Reduktion und kreatives Teleskopieren rationaler Funktionen
"""

from .hermite import HermiteReductionResult, hermite_reduce
from .methods import (
    BaseTelescopingMethod,
    DiffTelescoperResult,
    verify_ct_diff,
    ReductionMethod,
    ReductionSequence,
    reduction_ct,
    AZMethod,
    az_ct,
)
from .method_manager import MethodManager
from .order_degree import OrderDegreePoint, order_degree_scan, points_to_csv, points_to_frame
from .definite import integral_rhs

__all__ = [
    'HermiteReductionResult',
    'hermite_reduce',
    'BaseTelescopingMethod',
    'DiffTelescoperResult',
    'verify_ct_diff',
    'ReductionMethod',
    'ReductionSequence',
    'reduction_ct',
    'AZMethod',
    'az_ct',
    'MethodManager',
    'OrderDegreePoint',
    'order_degree_scan',
    'points_to_csv',
    'points_to_frame',
    'integral_rhs',
]
