"""
Separated quivers and Dynkin / Euclidean classification of their components.
"""
import logging
from collections import Counter
from functools import lru_cache
from typing import Any, Dict, List, Optional, Tuple

import networkx as nx
import numpy as np
from sympy import Matrix

from .link_quiver import LinkQuiver

logger = logging.getLogger(__name__)

DYNKIN = "Dynkin"
EUCLIDEAN = "Euclidean"
NEITHER = "Neither"


def primed(label: str) -> str:
    return f"{label}'"


def separated_quiver(q: LinkQuiver) -> nx.MultiGraph:
    """Bipartite multigraph on v and v' with one edge i -- j' per arrow i -> j."""
    g = nx.MultiGraph()
    for label, r in q.vertices:
        g.add_node(label, side=0, comatrix_dim=r)
    for label, r in q.vertices:
        g.add_node(primed(label), side=1, comatrix_dim=r)
    for (src, dst), mult in sorted(q.arrows.items()):
        for _ in range(mult):
            g.add_edge(src, primed(dst))
    return g


def _edge_key(g: nx.Graph) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
    nodes = sorted(g.nodes, key=str)
    index = {v: i for i, v in enumerate(nodes)}
    edges = []
    for u, v in g.edges():
        a, b = sorted((index[u], index[v]))
        edges.append((a, b))
    return len(nodes), tuple(sorted(edges))


def tits_matrix(n: int, edges: Tuple[Tuple[int, int], ...]) -> np.ndarray:
    """Integer matrix of 2q for q(x) = sum x_i^2 - sum_edges x_i x_j."""
    form = 2 * np.eye(n, dtype=np.int64)
    for a, b in edges:
        if a == b:
            form[a, a] -= 2
        else:
            form[a, b] -= 1
            form[b, a] -= 1
    return form


@lru_cache(maxsize=4096)
def _classify_form(n: int, edges: Tuple[Tuple[int, int], ...]) -> str:
    if n == 0:
        return DYNKIN
    form = Matrix(tits_matrix(n, edges).tolist())
    if form.is_positive_definite:
        return DYNKIN
    if form.is_positive_semidefinite and n - form.rank() == 1:
        return EUCLIDEAN
    return NEITHER


def classify_graph(g: nx.Graph) -> str:
    """
    Classify a connected multigraph by its Tits form.

    Returns:
        "Dynkin" if the form is positive definite, "Euclidean" if it is
        positive semidefinite with a one-dimensional radical, else "Neither"
    """
    return _classify_form(*_edge_key(g))


def _arm_length(g: nx.Graph, centre: Any, start: Any) -> int:
    length = 1
    previous, current = centre, start
    while g.degree(current) == 2:
        nxt = [w for w in g.neighbors(current) if w != previous][0]
        previous, current = current, nxt
        length += 1
    return length


_STAR_NAMES = {
    (1, 2, 2): "E6",
    (1, 2, 3): "E7",
    (1, 2, 4): "E8",
    (2, 2, 2): "~E6",
    (1, 3, 3): "~E7",
    (1, 2, 5): "~E8",
}


def diagram_name(g: nx.Graph) -> Optional[str]:
    """Name a connected multigraph by shape: A_n, D_n, E_n, their ~ extensions, or None."""
    n = g.number_of_nodes()
    multiplicity = Counter(tuple(sorted((u, v), key=str)) for u, v in g.edges())
    loops = sum(m for (u, v), m in multiplicity.items() if u == v)
    if n == 1:
        if loops == 0:
            return "A1"
        return "~A0" if loops == 1 else None
    if loops:
        return None
    if any(m > 1 for m in multiplicity.values()):
        if n == 2 and list(multiplicity.values()) == [2]:
            return "~A1"
        return None

    simple = nx.Graph(g)
    edges = simple.number_of_edges()
    degrees = dict(simple.degree())
    if edges == n and all(d == 2 for d in degrees.values()):
        return f"~A{n - 1}"
    if edges != n - 1:
        return None

    branch = [v for v, d in degrees.items() if d >= 3]
    if not branch:
        return f"A{n}"
    if len(branch) == 1:
        centre = branch[0]
        if degrees[centre] == 4:
            return "~D4" if n == 5 else None
        if degrees[centre] > 4:
            return None
        arms = tuple(sorted(_arm_length(simple, centre, w) for w in simple.neighbors(centre)))
        if arms[0] == 1 and arms[1] == 1:
            return f"D{n}"
        return _STAR_NAMES.get(arms)
    if len(branch) == 2 and all(degrees[v] == 3 for v in branch):
        for v in branch:
            leaves = [w for w in simple.neighbors(v) if degrees[w] == 1]
            if len(leaves) != 2:
                return None
        return f"~D{n - 1}"
    return None


def shape_class(name: Optional[str]) -> str:
    if name is None:
        return NEITHER
    return EUCLIDEAN if name.startswith("~") else DYNKIN


def separated_components(q: LinkQuiver) -> List[Dict[str, Any]]:
    """Connected components of the separated quiver with their classes."""
    g = separated_quiver(q)
    components = []
    for nodes in sorted((sorted(c, key=str) for c in nx.connected_components(g)), key=lambda c: c[0]):
        sub = g.subgraph(nodes)
        components.append({
            "nodes": nodes,
            "edges": sub.number_of_edges(),
            "class": classify_graph(sub),
            "diagram": diagram_name(sub),
        })
    return components
