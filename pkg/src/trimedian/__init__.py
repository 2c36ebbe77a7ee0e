"""Generalized cevian and median operators on triangle triples, with exact arithmetic."""

from .scalar import Cyc12
from .triangle import Triangle

__all__ = ["Cyc12", "Triangle"]
__version__ = "0.1.0"
