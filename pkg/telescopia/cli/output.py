"""
Telescopia - Ausgabe
JSON mit Schema-Prüfung, lesbare Textausgabe und CSV
"""

from __future__ import annotations

import json
import logging
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Iterable, Tuple

import click
import jsonschema
from rich.console import Console

from ..errors import VerificationError

logger = logging.getLogger(__name__)

SCHEMA_DIR = Path(__file__).resolve().parents[1] / 'schemas'


@lru_cache(maxsize=None)
def load_schema(name: str) -> Dict[str, Any]:
    with open(SCHEMA_DIR / f"{name}.json", 'r', encoding='utf-8') as f:
        return json.load(f)


def validate_document(document: Dict[str, Any], schema_name: str) -> None:
    """
    Raises:
        VerificationError: Dokument entspricht nicht dem Schema
    """
    try:
        jsonschema.validate(document, load_schema(schema_name))
    except jsonschema.ValidationError as exc:
        raise VerificationError(f"{schema_name} output violates its schema: {exc.message}") from exc


def emit_json(document: Dict[str, Any], schema_name: str, validate: bool = True) -> None:
    if validate:
        validate_document(document, schema_name)
    click.echo(json.dumps(document, indent=2, ensure_ascii=False))


def _console() -> Console:
    # bindet an das aktuelle sys.stdout
    return Console(markup=False, highlight=False, soft_wrap=True)


def emit_human(title: str, fields: Iterable[Tuple[str, Any]]) -> None:
    """Zeilen `name: wert` unter einer Überschrift."""
    console = _console()
    console.print(title, style="bold")
    for name, value in fields:
        if isinstance(value, (list, tuple)):
            value = ", ".join(str(v) for v in value)
        console.print(f"  {name}: {value}")


def emit_csv(text: str) -> None:
    click.echo(text, nl=False)


__all__ = ['SCHEMA_DIR', 'load_schema', 'validate_document', 'emit_json', 'emit_human', 'emit_csv']
