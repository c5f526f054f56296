"""
Telescopia Ore
Ore-Operatoren und P-rekursive Rekurrenzen
"""

from .operator import (
    Generator,
    OreAlgebraSpec,
    OreOperator,
    ore_mul,
    ore_apply,
    normalize_operator,
    format_operator,
    parse_operator,
)
from .recurrence import (
    Recurrence,
    RecurrenceCheck,
    ode_to_rec,
    rec_unroll,
    rec_unroll_with_oracle,
    check_recurrence,
)

__all__ = [
    'Generator',
    'OreAlgebraSpec',
    'OreOperator',
    'ore_mul',
    'ore_apply',
    'normalize_operator',
    'format_operator',
    'parse_operator',
    'Recurrence',
    'RecurrenceCheck',
    'ode_to_rec',
    'rec_unroll',
    'rec_unroll_with_oracle',
    'check_recurrence',
]
