"""
Exact scalars for hopfscope: cyclotomic numbers and sparse linear algebra.
"""

from .cyclo import (
    CycloNumber,
    canonicalize,
    common_order,
    conductor_bound,
    cyclo_arith,
    cyclotomic_domain,
    primitive_root_order,
)
from .linalg import (
    add_into,
    inverse_rows,
    is_independent,
    left_kernel,
    nullspace,
    rank,
    rref,
    scale_vector,
    solve_combination,
    sub_vectors,
    transpose,
    vector_order,
    vectors_equal,
)

__all__ = [
    "CycloNumber",
    "canonicalize",
    "common_order",
    "conductor_bound",
    "cyclo_arith",
    "cyclotomic_domain",
    "primitive_root_order",
    "add_into",
    "inverse_rows",
    "is_independent",
    "left_kernel",
    "nullspace",
    "rank",
    "rref",
    "scale_vector",
    "solve_combination",
    "sub_vectors",
    "transpose",
    "vector_order",
    "vectors_equal",
]
