"""Symbol-pair MDS codes from matrix-product codes over small finite fields."""

from __future__ import annotations

from .gf import FieldElement, FieldSpec, all_elements, field_new, field_of_order, root_of_unity
from .linalg import FMatrix

__version__ = "0.1.0"

__all__ = [
    "FMatrix",
    "FieldElement",
    "FieldSpec",
    "all_elements",
    "field_new",
    "field_of_order",
    "root_of_unity",
]
