"""
Telescopia - Konfiguration
Lädt die YAML-Standardwerte und überlagert eine optionale Benutzerdatei
"""

from __future__ import annotations

import copy
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml

from ..errors import DomainError

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent / 'telescopia.yaml'
CONFIG_ENV_VAR = 'TELESCOPIA_CONFIG'


def _deep_merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _deep_merge(merged[key], value)
        else:
            merged[key] = copy.deepcopy(value)
    return merged


def _read_yaml(path: Path) -> Dict[str, Any]:
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = yaml.safe_load(f) or {}
    except FileNotFoundError as exc:
        raise DomainError(f"configuration file not found: {path}") from exc
    except yaml.YAMLError as exc:
        raise DomainError(f"invalid YAML in {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise DomainError(f"configuration in {path} must be a mapping")
    return data


def load_config(path: Optional[Union[str, Path]] = None) -> Dict[str, Any]:
    """
    Standardkonfiguration, überlagert mit `path` oder $TELESCOPIA_CONFIG.

    Raises:
        DomainError: Datei fehlt oder ist kein YAML-Mapping
    """
    cfg = _read_yaml(DEFAULT_CONFIG_PATH)
    path = path or os.environ.get(CONFIG_ENV_VAR)
    if path:
        cfg = _deep_merge(cfg, _read_yaml(Path(path)))
        logger.debug(f"configuration loaded from {path}")
    return cfg


def configure_logging(cfg: Dict[str, Any], level: Optional[str] = None) -> None:
    """Root-Logger aus dem Abschnitt `logging`; `level` hat Vorrang."""
    log_cfg = cfg.get('logging', {})
    name = (level or log_cfg.get('level', 'WARNING')).upper()
    numeric = getattr(logging, name, None)
    if not isinstance(numeric, int):
        raise DomainError(f"unknown log level: {name}")
    logging.basicConfig(level=numeric,
                        format=log_cfg.get('format', '%(asctime)s %(levelname)s %(name)s: %(message)s'),
                        force=True)


__all__ = ['load_config', 'configure_logging', 'DEFAULT_CONFIG_PATH', 'CONFIG_ENV_VAR']
