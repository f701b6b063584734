"""
Structure-constant containers, axiom checks, duality, convolution and
matrices over algebras.
"""

from .hopf_data import (
    HopfData,
    LEVELS,
    apply_map,
    compose_maps,
    identity_map,
    map_from_json,
    map_to_json,
)
from .report import CheckResult, VerificationReport, collect_witnesses, ordered_map
from .axioms import generated_dimension, verify_axioms
from .operations import antipode_map, convolve, dualize, unit_counit_map
from .matrices import MatrixKindResult, MatrixOverAlgebra, matrix_odot, outer, verify_matrix_kind

__all__ = [
    "HopfData",
    "LEVELS",
    "apply_map",
    "compose_maps",
    "identity_map",
    "map_from_json",
    "map_to_json",
    "CheckResult",
    "VerificationReport",
    "collect_witnesses",
    "ordered_map",
    "generated_dimension",
    "verify_axioms",
    "antipode_map",
    "convolve",
    "dualize",
    "unit_counit_map",
    "MatrixKindResult",
    "MatrixOverAlgebra",
    "matrix_odot",
    "outer",
    "verify_matrix_kind",
]
