"""
Telescopia - Telescoper-Verfahren
"""

from .base_method import BaseTelescopingMethod, DiffTelescoperResult, verify_ct_diff
from .reduction_method import ReductionMethod, ReductionSequence, reduction_ct
from .az_method import AZMethod, az_ct

__all__ = [
    'BaseTelescopingMethod',
    'DiffTelescoperResult',
    'verify_ct_diff',
    'ReductionMethod',
    'ReductionSequence',
    'reduction_ct',
    'AZMethod',
    'az_ct',
]
