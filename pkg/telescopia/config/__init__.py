"""
Telescopia Config
YAML-Konfiguration, Logging und benannte Diagonalprobleme
"""

from .settings import load_config, configure_logging, DEFAULT_CONFIG_PATH, CONFIG_ENV_VAR
from .diagonal_profiles import DiagonalProfile, DIAGONAL_PROFILES, get_profile, list_profiles

__all__ = [
    'load_config',
    'configure_logging',
    'DEFAULT_CONFIG_PATH',
    'CONFIG_ENV_VAR',
    'DiagonalProfile',
    'DIAGONAL_PROFILES',
    'get_profile',
    'list_profiles',
]
