"""Exact character tables and classification of p-constant characters."""

from __future__ import annotations

from .partition import Partition, conjugate, degree, p_core
from .cyclotomic import Cyclotomic, E
from .table import CharacterTable, ClassInfo, OrthogonalityError
from .symchar import sym_character_table, p_constant_sym
from .altchar import alt_character_table, p_constant_alt, QuadraticValue
from .pconst import PConstReport, p_constant_report, p_singular_classes, NoSingular

__version__ = "0.1.0"

__all__ = [
    "Partition", "conjugate", "degree", "p_core",
    "Cyclotomic", "E",
    "CharacterTable", "ClassInfo", "OrthogonalityError",
    "sym_character_table", "p_constant_sym",
    "alt_character_table", "p_constant_alt", "QuadraticValue",
    "PConstReport", "p_constant_report", "p_singular_classes", "NoSingular",
]
