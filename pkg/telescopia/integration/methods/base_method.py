"""
Telescopia - Base Method
Abstrakte Basisklasse für Verfahren des kreativen Teleskopierens rationaler Funktionen
"""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from ...core.rational_function import RationalFunction
from ...ore.operator import OreOperator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DiffTelescoperResult:
    """L(x, Dx)·f = Dy(g)"""

    telescoper: OreOperator
    certificate: RationalFunction
    integration_variable: str

    # Name des Verfahrens und Zusatzinformationen (z.B. Dimension des Restraums)
    method: str = ""
    metadata: Dict[str, Any] = field(default_factory=dict, compare=False)

    @property
    def order(self) -> int:
        return self.telescoper.order

    def to_dict(self) -> Dict[str, Any]:
        """Konvertiert zu Dictionary für JSON-Ausgabe"""
        return {
            'telescoper': str(self.telescoper),
            'certificate': str(self.certificate),
            'order': self.order,
            'coefficients': [str(c) for c in self.telescoper.coeffs],
            'method': self.method,
            'metadata': dict(self.metadata),
        }


def verify_ct_diff(f: RationalFunction, res: DiffTelescoperResult) -> bool:
    """Exakte Prüfung von L·f = ∂g/∂y mit L ≠ 0."""
    if res.telescoper.is_zero:
        return False
    return res.telescoper.apply(f) == res.certificate.derivative(res.integration_variable)


class BaseTelescopingMethod(ABC):
    """
    Abstrakte Basisklasse für Telescoper-Verfahren

    Jedes Verfahren implementiert:
    - find_telescoper(): sucht L und g für f(x, y)
    """

    def __init__(self, name: str, config: Optional[Dict[str, Any]] = None):
        self.name = name
        self.config = config or {}
        self.logger = logging.getLogger(f"{__name__}.{name}")

    @abstractmethod
    def find_telescoper(self,
                        f: RationalFunction,
                        x: str,
                        y: str,
                        order: Optional[int] = None) -> Optional[DiffTelescoperResult]:
        """
        Sucht einen Telescoper für f.

        Args:
            f: rationale Funktion in x, y
            x: Variable des Telescopers
            y: Integrationsvariable
            order: feste Ordnung (None: minimale Ordnung des Verfahrens)

        Returns:
            DiffTelescoperResult oder None
        """
        pass

    def verify(self, f: RationalFunction, result: DiffTelescoperResult) -> bool:
        ok = verify_ct_diff(f, result)
        if not ok:
            self.logger.error(f"telescoper {result.telescoper} does not verify for {f}")
        return ok

    def __str__(self) -> str:
        return f"{self.__class__.__name__}(name='{self.name}')"

    def __repr__(self) -> str:
        return self.__str__()
