"""
The unital based ring of simple subcoalgebras.
"""

from .table import BasedRingTable, build_based_ring, character, simple_product
from .checks import (
    closure_from_unit,
    fp_sides,
    generation_connectivity,
    verify_arrow_consistency,
    verify_based_axioms,
    verify_fpequation,
)

__all__ = [
    "BasedRingTable",
    "build_based_ring",
    "character",
    "simple_product",
    "closure_from_unit",
    "fp_sides",
    "generation_connectivity",
    "verify_arrow_consistency",
    "verify_based_axioms",
    "verify_fpequation",
]
