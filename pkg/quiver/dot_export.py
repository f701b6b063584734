"""
DOT text for link quivers and separated quivers.
"""
import logging
from pathlib import Path
from collections import Counter
from typing import List, Union

from .link_quiver import LinkQuiver
from .separated import separated_quiver

logger = logging.getLogger(__name__)


def _quote(text: str) -> str:
    return '"' + str(text).replace("\\", "\\\\").replace('"', '\\"') + '"'


def _vertex_line(label: str, r: int) -> str:
    return f"  {_quote(label)} [label={_quote(f'{label} ({r * r})')}];"


def link_quiver_dot(q: LinkQuiver, name: str = "link_quiver") -> str:
    """Directed graph with one edge per (source, target) and multiplicity as an attribute."""
    lines: List[str] = [f"digraph {_quote(name)} {{"]
    for label, r in q.vertices:
        lines.append(_vertex_line(label, r))
    for (src, dst), mult in sorted(q.arrows.items()):
        lines.append(f"  {_quote(src)} -> {_quote(dst)} [multiplicity={mult}, label={_quote(str(mult))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def separated_quiver_dot(q: LinkQuiver, name: str = "separated_quiver") -> str:
    g = separated_quiver(q)
    counts = Counter(tuple(sorted((u, v))) for u, v in g.edges())
    lines: List[str] = [f"graph {_quote(name)} {{"]
    for node, data in sorted(g.nodes(data=True)):
        lines.append(_vertex_line(node, data["comatrix_dim"]))
    for (u, v), mult in sorted(counts.items()):
        lines.append(f"  {_quote(u)} -- {_quote(v)} [multiplicity={mult}, label={_quote(str(mult))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_dot(q: LinkQuiver, path: Union[str, Path], separated: bool = False) -> str:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    text = separated_quiver_dot(q) if separated else link_quiver_dot(q)
    path.write_text(text)
    logger.info(f"Wrote DOT graph to {path}")
    return str(path)
