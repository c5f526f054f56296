"""
Telescopia CLI
Click-Befehle und Ausgabeformate
"""

from .main import cli, main

__all__ = ['cli', 'main']
