"""
Link quivers of coalgebras with split coradical.

Vertices are the simple subcoalgebras. A (C, D)-primitive contributes
arrows from D to C, and their number is dim((C ^ D)/(C + D)) / (r_C r_D).
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import networkx as nx

from coradical import SimpleBlock, Subspace, coradical_blocks, wedge
from errors import DivisibilityViolation, InputFormatError, MissingTrivialVertex
from tensorcore import HopfData, ordered_map

logger = logging.getLogger(__name__)


@dataclass
class LinkQuiver:
    """Vertices (label, r) and arrow multiplicities keyed by (source, target)."""
    vertices: List[Tuple[str, int]]
    arrows: Dict[Tuple[str, str], int] = field(default_factory=dict)
    trivial: Optional[str] = None
    blocks: List[SimpleBlock] = field(default_factory=list, repr=False, compare=False)

    def __post_init__(self):
        names = [v for v, _ in self.vertices]
        if len(set(names)) != len(names):
            raise InputFormatError(f"duplicate vertex labels in {names}")
        known = set(names)
        for (src, dst), mult in list(self.arrows.items()):
            if src not in known or dst not in known:
                raise InputFormatError(f"arrow {src}->{dst} uses an unknown vertex")
            if mult < 0:
                raise InputFormatError(f"negative multiplicity on {src}->{dst}")
            if mult == 0:
                del self.arrows[(src, dst)]
        if self.trivial is not None and self.trivial not in known:
            raise InputFormatError(f"trivial vertex {self.trivial} is not a vertex")

    @property
    def comatrix_dims(self) -> Dict[str, int]:
        return dict(self.vertices)

    def dim_of(self, label: str) -> int:
        r = self.comatrix_dims[label]
        return r * r

    def arrows_into(self, label: str) -> Dict[str, int]:
        return {src: m for (src, dst), m in self.arrows.items() if dst == label}

    def arrows_from(self, label: str) -> Dict[str, int]:
        return {dst: m for (src, dst), m in self.arrows.items() if src == label}

    def to_networkx(self) -> nx.MultiDiGraph:
        g = nx.MultiDiGraph()
        for label, r in self.vertices:
            g.add_node(label, comatrix_dim=r, dim=r * r)
        for (src, dst), mult in sorted(self.arrows.items()):
            for _ in range(mult):
                g.add_edge(src, dst)
        return g

    def is_link_indecomposable(self) -> bool:
        if not self.vertices:
            return True
        return nx.is_weakly_connected(self.to_networkx())

    def component_of_trivial(self) -> List[str]:
        """Vertices of the link-indecomposable component containing k1."""
        if self.trivial is None:
            raise MissingTrivialVertex("link quiver has no vertex containing the unit")
        undirected = self.to_networkx().to_undirected()
        return sorted(nx.node_connected_component(undirected, self.trivial))

    def to_json(self) -> Dict[str, Any]:
        return {
            "vertices": [{"label": v, "comatrix_dim": r, "dim": r * r} for v, r in self.vertices],
            "arrows": [[src, dst, m] for (src, dst), m in sorted(self.arrows.items())],
            "trivial": self.trivial,
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "LinkQuiver":
        try:
            vertices = []
            for v in data["vertices"]:
                if isinstance(v, dict):
                    vertices.append((str(v["label"]), int(v["comatrix_dim"])))
                else:
                    vertices.append((str(v[0]), int(v[1])))
            arrows: Dict[Tuple[str, str], int] = {}
            for src, dst, m in data.get("arrows", []):
                arrows[(str(src), str(dst))] = arrows.get((str(src), str(dst)), 0) + int(m)
        except (KeyError, TypeError, ValueError) as e:
            raise InputFormatError(f"malformed link quiver JSON: {e}")
        return cls(vertices=vertices, arrows=arrows, trivial=data.get("trivial"))


def _trivial_label(h: HopfData, blocks: Sequence[SimpleBlock]) -> Optional[str]:
    if h.unit is None:
        return None
    unit = h.unit_vector()
    for block in blocks:
        if block.dim == 1 and block.space.contains(unit):
            return block.label
    return None


def link_quiver(h: HopfData, hints: Optional[Sequence[Subspace]] = None,
                blocks: Optional[Sequence[SimpleBlock]] = None, threads: int = 1) -> LinkQuiver:
    """
    Link quiver of a coalgebra whose coradical splits over Q(zeta_n).

    Args:
        h: coalgebra-level data or richer
        hints: optional simple subcoalgebras of the coradical
        blocks: precomputed simple blocks (skips the decomposition)
        threads: worker threads for the wedge kernels

    Returns:
        LinkQuiver with integral multiplicities

    Raises:
        DivisibilityViolation: a wedge quotient is not divisible by r_C r_D
        FieldTooSmall: propagated from the decomposition
    """
    if blocks is None:
        blocks = coradical_blocks(h, hints)
    blocks = list(blocks)
    pairs = [(c, d) for c in blocks for d in blocks]

    def count(pair: Tuple[SimpleBlock, SimpleBlock]) -> int:
        c, d = pair
        extension = wedge(h, c.space, d.space).dim - (c.space + d.space).dim
        rs = c.comatrix_dim * d.comatrix_dim
        if extension % rs:
            raise DivisibilityViolation(
                f"dim(({c.label} ^ {d.label})/({c.label} + {d.label})) = {extension} "
                f"is not divisible by {rs}"
            )
        return extension // rs

    counts = ordered_map(count, pairs, threads)
    arrows = {}
    for (c, d), mult in zip(pairs, counts):
        if mult:
            arrows[(d.label, c.label)] = mult
            logger.debug(f"{mult} arrow(s) {d.label} -> {c.label}")

    quiver = LinkQuiver(
        vertices=[(b.label, b.comatrix_dim) for b in blocks],
        arrows=arrows,
        trivial=_trivial_label(h, blocks),
        blocks=blocks,
    )
    logger.info(f"Link quiver with {len(blocks)} vertices and {sum(arrows.values())} arrows")
    return quiver


@dataclass
class OneSidedInvariants:
    """Arrows ending at and starting from the trivial vertex."""
    into_count: int
    into_sources: List[str]
    out_count: int
    out_targets: List[str]
    source_dims: Dict[str, int]
    target_dims: Dict[str, int]

    @property
    def balanced(self) -> bool:
        return self.into_count == self.out_count

    def to_dict(self) -> Dict[str, Any]:
        return {
            "into_count": self.into_count,
            "into_sources": self.into_sources,
            "source_dims": self.source_dims,
            "out_count": self.out_count,
            "out_targets": self.out_targets,
            "target_dims": self.target_dims,
            "balanced": self.balanced,
        }


def one_sided_invariants(q: LinkQuiver) -> OneSidedInvariants:
    """|1P|, 1S, |P1| and S1 at the trivial vertex."""
    if q.trivial is None:
        raise MissingTrivialVertex("link quiver has no vertex containing the unit")
    into = q.arrows_into(q.trivial)
    out = q.arrows_from(q.trivial)
    invariants = OneSidedInvariants(
        into_count=sum(into.values()),
        into_sources=sorted(into),
        out_count=sum(out.values()),
        out_targets=sorted(out),
        source_dims={v: q.dim_of(v) for v in sorted(into)},
        target_dims={v: q.dim_of(v) for v in sorted(out)},
    )
    if not invariants.balanced:
        logger.warning(f"|1P| = {invariants.into_count} differs from |P1| = {invariants.out_count}")
    return invariants


def divisibility_report(q: LinkQuiver, into_count: int) -> Dict[str, bool]:
    """Whether |1P| divides the number of arrows ending at each vertex."""
    if into_count == 0:
        return {}
    report = {}
    for label, _ in q.vertices:
        total = sum(q.arrows_into(label).values())
        report[label] = total % into_count == 0
    return report
