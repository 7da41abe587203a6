"""
Algebraic foundations: finite fields and exponent-set combinatorics.
"""

from .field import FieldElement, FieldSpec, make_field
from .lattice import Exponent, ExponentBox, ExponentSet

__all__ = [
    "FieldElement",
    "FieldSpec",
    "make_field",
    "Exponent",
    "ExponentBox",
    "ExponentSet",
]
