"""
Tame local graded Frobenius quotients, the polynomials H1 = H2 = H3 and the
K-matrix constraints.
"""

from .presented import (
    FAMILIES,
    FrobeniusData,
    PresentedAlgebra,
    algebra_from_rules,
    build_tame_quotient,
    confluence_check,
    family_rules,
    frobenius_data,
    normal_form,
    normal_words,
    reduce_word,
)
from .combinatorics import (
    VARIANTS,
    CombiPolynomial,
    bounded_tuples,
    check_H_identities,
    check_vanishing_criterion,
    combi_poly,
    h1,
    h2,
    h3,
)
from .kmatrix import check_caseI_constraints, is_diagonal, k_from_json, k_to_json, k_to_text, solve_K

__all__ = [
    "FAMILIES",
    "FrobeniusData",
    "PresentedAlgebra",
    "algebra_from_rules",
    "build_tame_quotient",
    "confluence_check",
    "family_rules",
    "frobenius_data",
    "normal_form",
    "normal_words",
    "reduce_word",
    "VARIANTS",
    "CombiPolynomial",
    "bounded_tuples",
    "check_H_identities",
    "check_vanishing_criterion",
    "combi_poly",
    "h1",
    "h2",
    "h3",
    "check_caseI_constraints",
    "is_diagonal",
    "k_from_json",
    "k_to_json",
    "k_to_text",
    "solve_K",
]
