"""
Telescopia - Fehlerklassen
Gemeinsame Ausnahmehierarchie aller Module
"""

from __future__ import annotations

from typing import Any, Mapping, Optional


class TelescopiaError(Exception):
    """Basisklasse aller Telescopia-Fehler. `exit_code` wird vom CLI verwendet."""

    exit_code: int = 1


class DivisionError(TelescopiaError, ArithmeticError):
    """Division durch null oder nicht exakte Polynomdivision."""

    exit_code = 4


class DomainError(TelescopiaError, ValueError):
    """Eingabe verletzt eine Vorbedingung (z.B. Polstelle im Ursprung)."""

    exit_code = 3


class AlgebraError(TelescopiaError, TypeError):
    """Operatoren aus verschiedenen Ore-Algebren wurden kombiniert."""

    exit_code = 3


class PoleError(TelescopiaError, ArithmeticError):
    """Auswertung an einer Polstelle."""

    exit_code = 4

    def __init__(self, message: str, point: Optional[Mapping[str, Any]] = None):
        super().__init__(message)
        self.point = dict(point or {})


class CertificatePoleError(PoleError):
    """Zertifikat-Term lässt sich an einem Randpunkt nicht auswerten."""


class SingularIndexError(TelescopiaError, ArithmeticError):
    """Leitkoeffizient einer Rekurrenz verschwindet beim Abrollen."""

    exit_code = 4

    def __init__(self, index: int):
        super().__init__(f"leading coefficient vanishes at index {index}")
        self.index = index


class NotFoundError(TelescopiaError, LookupError):
    """Kein Telescoper bis zur angegebenen Ordnung."""

    exit_code = 1

    def __init__(self, max_order: int):
        super().__init__(f"no telescoper of order <= {max_order}")
        self.max_order = max_order


NotFound = NotFoundError


class VerificationError(TelescopiaError):
    """Ein berechnetes Ergebnis besteht die exakte Prüfung nicht."""

    exit_code = 1

    def __init__(self, message: str, failing_index: Optional[int] = None):
        super().__init__(message)
        self.failing_index = failing_index


class UnsupportedError(TelescopiaError):
    """Fall liegt ausserhalb des implementierten Umfangs."""

    exit_code = 3


class UnsupportedExpressionError(UnsupportedError):
    """Ausdruck ist kein eigentlicher hypergeometrischer Term."""


class ParseError(TelescopiaError, ValueError):
    """Syntaxfehler mit Zeilen- und Spaltenangabe (1-basiert)."""

    exit_code = 2

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column


class UnknownIdentifierError(ParseError):
    """Bezeichner ist weder deklarierte Variable noch bekannte Funktion."""


__all__ = [
    'TelescopiaError',
    'DivisionError',
    'DomainError',
    'AlgebraError',
    'PoleError',
    'CertificatePoleError',
    'SingularIndexError',
    'NotFoundError',
    'NotFound',
    'VerificationError',
    'UnsupportedError',
    'UnsupportedExpressionError',
    'ParseError',
    'UnknownIdentifierError',
]
