"""
Corepresentation-type verdicts from the arrows at the trivial vertex.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Sequence

from coradical import Subspace
from tensorcore import HopfData
from .link_quiver import LinkQuiver, divisibility_report, link_quiver, one_sided_invariants
from .separated import DYNKIN, EUCLIDEAN, NEITHER, separated_components

logger = logging.getLogger(__name__)

FINITE = "Finite"
TAME_CANDIDATE = "TameCandidate"
WILD = "Wild"
INCONCLUSIVE = "Inconclusive"


@dataclass
class RepTypeVerdict:
    kind: str
    case: Optional[str] = None
    evidence: Dict[str, Any] = field(default_factory=dict)

    def __str__(self) -> str:
        return f"{self.kind}({self.case})" if self.case else self.kind

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind, "case": self.case, "label": str(self), "evidence": self.evidence}


def decide(into_count: int, source_dims: Sequence[int]) -> RepTypeVerdict:
    """The decision table on |1P| and the dimensions of the members of 1S."""
    dims = list(source_dims)
    if into_count == 0:
        return RepTypeVerdict(FINITE)
    if into_count >= 3:
        return RepTypeVerdict(WILD, "i")
    if into_count == 2:
        if any(d >= 4 for d in dims):
            return RepTypeVerdict(WILD, "ii")
        return RepTypeVerdict(TAME_CANDIDATE, "i")
    (dim,) = dims
    if dim == 1:
        return RepTypeVerdict(FINITE)
    if dim == 4:
        return RepTypeVerdict(TAME_CANDIDATE, "ii")
    return RepTypeVerdict(WILD, "iii")


def outgoing_case(out_count: int, target_dims: Dict[str, int]) -> Optional[str]:
    """Which shape of (|P1|, S1) a tame candidate shows."""
    dims = sorted(target_dims.values())
    if out_count == 1 and dims == [4]:
        return "i"
    if out_count == 2 and dims == [1]:
        return "ii"
    if out_count == 2 and dims == [1, 1]:
        return "iii"
    return None


def verdict_from_quiver(q: LinkQuiver) -> RepTypeVerdict:
    """
    Verdict and evidence for a link quiver.

    The separated-quiver classes are advisory: a Finite verdict expects only
    Dynkin components and a Wild verdict expects some Neither component.
    Mismatches are logged, never enforced.
    """
    inv = one_sided_invariants(q)
    verdict = decide(inv.into_count, list(inv.source_dims.values()))
    components = separated_components(q)
    classes = sorted({c["class"] for c in components})
    consistent = True
    if verdict.kind == FINITE and any(c != DYNKIN for c in classes):
        consistent = False
    if verdict.kind == WILD and NEITHER not in classes:
        consistent = False
    if verdict.kind == TAME_CANDIDATE and (NEITHER in classes or EUCLIDEAN not in classes):
        consistent = False
    if not consistent:
        logger.warning(f"separated quiver classes {classes} do not match verdict {verdict}")

    verdict.evidence = {
        "invariants": inv.to_dict(),
        "separated_components": components,
        "separated_consistent": consistent,
        "link_indecomposable": q.is_link_indecomposable(),
        "divisibility": divisibility_report(q, inv.into_count),
    }
    if verdict.kind == TAME_CANDIDATE:
        verdict.evidence["outgoing_case"] = outgoing_case(inv.out_count, inv.target_dims)
    logger.info(f"Corepresentation type: {verdict}")
    return verdict


def corepresentation_type(h: HopfData, hints: Optional[Sequence[Subspace]] = None,
                          threads: int = 1) -> RepTypeVerdict:
    q = link_quiver(h, hints=hints, threads=threads)
    verdict = verdict_from_quiver(q)
    verdict.evidence["quiver"] = q.to_json()
    return verdict
