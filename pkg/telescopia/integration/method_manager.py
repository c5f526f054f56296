"""
Telescopia - Method Manager
Verwaltet die Telescoper-Verfahren und wählt sie per Konfiguration aus
"""

from __future__ import annotations

import logging
from typing import Any, Dict, List, Optional

from ..core.rational_function import RationalFunction
from ..errors import NotFoundError, UnsupportedError, VerificationError
from .methods import AZMethod, BaseTelescopingMethod, DiffTelescoperResult, ReductionMethod

logger = logging.getLogger(__name__)


class MethodManager:
    """
    Verwaltet alle verfügbaren Verfahren; jedes Ergebnis wird vor der Rückgabe geprüft
    """

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        self.config = config or {}

        self.methods: Dict[str, BaseTelescopingMethod] = {
            'reduction': ReductionMethod(self.config),
            'az': AZMethod(self.config),
        }
        self.default_method = self.config.get('method', 'reduction')

        logger.info(f"MethodManager initialized with {len(self.methods)} methods")

    def list_methods(self) -> List[str]:
        return list(self.methods)

    def get_method(self, name: Optional[str] = None) -> BaseTelescopingMethod:
        name = name or self.default_method
        if name not in self.methods:
            raise UnsupportedError(f"unknown telescoping method '{name}', available: {self.list_methods()}")
        return self.methods[name]

    def telescope(self,
                  f: RationalFunction,
                  x: str = "x",
                  y: str = "y",
                  method: Optional[str] = None,
                  order: Optional[int] = None) -> DiffTelescoperResult:
        """
        Sucht und prüft einen Telescoper.

        Raises:
            NotFoundError: Verfahren liefert kein Ergebnis
            VerificationError: Ergebnis besteht die Prüfung nicht
        """
        selected = self.get_method(method)
        result = selected.find_telescoper(f, x, y, order)
        if result is None:
            raise NotFoundError(order if order is not None else f.den.degree(y))
        if not selected.verify(f, result):
            raise VerificationError(f"{selected.name} telescoper {result.telescoper} failed verification")
        return result
