"""
Radicals, coradicals, wedges, coradical filtrations and simple subcoalgebras.
"""

from .subspace import Subspace, is_subcoalgebra, restrict_coalgebra, row_label
from .filtration import (
    check_coradically_graded,
    coradical,
    coradical_filtration,
    dual_chevalley_property,
    grading_report,
    is_nilpotent_ideal,
    jacobson_radical,
    trace_form,
    wedge,
)
from .simples import (
    SimpleBlock,
    centre_basis,
    coradical_blocks,
    is_split_block,
    label_blocks,
    simple_decomposition,
)

__all__ = [
    "Subspace",
    "is_subcoalgebra",
    "restrict_coalgebra",
    "row_label",
    "check_coradically_graded",
    "coradical",
    "coradical_filtration",
    "dual_chevalley_property",
    "grading_report",
    "is_nilpotent_ideal",
    "jacobson_radical",
    "trace_form",
    "wedge",
    "SimpleBlock",
    "centre_basis",
    "coradical_blocks",
    "is_split_block",
    "label_blocks",
    "simple_decomposition",
]
