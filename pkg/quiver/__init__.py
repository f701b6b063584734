"""
Link quivers, separated quivers, Tits-form classification and
corepresentation-type verdicts.
"""

from .link_quiver import (
    LinkQuiver,
    OneSidedInvariants,
    divisibility_report,
    link_quiver,
    one_sided_invariants,
)
from .separated import (
    DYNKIN,
    EUCLIDEAN,
    NEITHER,
    classify_graph,
    diagram_name,
    separated_components,
    separated_quiver,
    shape_class,
    tits_matrix,
)
from .verdict import (
    FINITE,
    INCONCLUSIVE,
    TAME_CANDIDATE,
    WILD,
    RepTypeVerdict,
    corepresentation_type,
    decide,
    outgoing_case,
    verdict_from_quiver,
)
from .dot_export import link_quiver_dot, separated_quiver_dot, write_dot

__all__ = [
    "LinkQuiver",
    "OneSidedInvariants",
    "divisibility_report",
    "link_quiver",
    "one_sided_invariants",
    "DYNKIN",
    "EUCLIDEAN",
    "NEITHER",
    "classify_graph",
    "diagram_name",
    "separated_components",
    "separated_quiver",
    "shape_class",
    "tits_matrix",
    "FINITE",
    "INCONCLUSIVE",
    "TAME_CANDIDATE",
    "WILD",
    "RepTypeVerdict",
    "corepresentation_type",
    "decide",
    "outgoing_case",
    "verdict_from_quiver",
    "link_quiver_dot",
    "separated_quiver_dot",
    "write_dot",
]
