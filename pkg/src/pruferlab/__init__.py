"""Finite commutative rings and the Prüfer-like conditions: semihereditary,
weak global dimension at most one, arithmetical, Gaussian and Prüfer."""

from __future__ import annotations

from .deciders import ClassificationReport, classify
from .errors import PruferLabError
from .presentation import poly_quotient
from .ring import TableRing, direct_product, zmod
from .spec import build, loads

__version__ = "0.1.0"

__all__ = [
    "ClassificationReport",
    "PruferLabError",
    "TableRing",
    "build",
    "classify",
    "direct_product",
    "loads",
    "poly_quotient",
    "zmod",
]
