"""
Subspaces of a structure-constant carrier in canonical reduced row echelon form.
"""
import logging
from math import gcd
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Sequence, Tuple

from exactfield import CycloNumber, add_into, nullspace, rref
from errors import DimensionMismatch, InputFormatError
from tensorcore import HopfData

logger = logging.getLogger(__name__)

Vector = Dict[int, CycloNumber]


@dataclass(frozen=True)
class Subspace:
    """Span of rows in RREF: pivot entries are 1 and pivots strictly increase.

    Two equal subspaces have identical rows and pivots.
    """
    carrier_dim: int
    rows: Tuple[Dict[int, CycloNumber], ...]
    pivots: Tuple[int, ...]
    order: int = 1

    @classmethod
    def span(cls, vectors: Iterable[Vector], carrier_dim: int, order: int = 1) -> "Subspace":
        vectors = [v for v in vectors if v]
        for v in vectors:
            if any(not 0 <= k < carrier_dim for k in v):
                raise DimensionMismatch(f"vector outside carrier dimension {carrier_dim}")
        rows, pivots = rref(vectors, order, list(range(carrier_dim)))
        return cls(carrier_dim, tuple(rows), tuple(pivots), order)

    @classmethod
    def zero(cls, carrier_dim: int, order: int = 1) -> "Subspace":
        return cls(carrier_dim, (), (), order)

    @classmethod
    def full(cls, carrier_dim: int, order: int = 1) -> "Subspace":
        one = CycloNumber.one(order)
        return cls(carrier_dim, tuple({i: one} for i in range(carrier_dim)), tuple(range(carrier_dim)), order)

    @classmethod
    def of_basis_vectors(cls, indices: Iterable[int], carrier_dim: int, order: int = 1) -> "Subspace":
        one = CycloNumber.one(order)
        idx = sorted(set(indices))
        return cls(carrier_dim, tuple({i: one} for i in idx), tuple(idx), order)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return self.dim

    def __hash__(self) -> int:
        # rows hold dicts; equal subspaces share their pivots
        return hash((self.carrier_dim, self.pivots))

    def reduce(self, v: Vector) -> Vector:
        """Remainder of v modulo the subspace; zero iff v lies in it.

        The remainder has no pivot entries, so it doubles as the coordinates
        of the image of v in the quotient by this subspace.
        """
        out = dict(v)
        for row, p in zip(self.rows, self.pivots):
            c = out.get(p)
            if c:
                add_into(out, row, -c)
        return out

    def contains(self, v: Vector) -> bool:
        return not self.reduce(v)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(row) for row in other.rows)

    def coordinates(self, v: Vector) -> Vector:
        """Coordinates of v (assumed inside) with respect to the rows."""
        return {r: v[p] for r, p in enumerate(self.pivots) if v.get(p)}

    def from_coordinates(self, coords: Vector) -> Vector:
        out: Vector = {}
        for r, c in coords.items():
            add_into(out, self.rows[r], c)
        return out

    def projections(self) -> List[Vector]:
        """Quotient images of every standard basis vector."""
        one = CycloNumber.one(self.order)
        return [self.reduce({i: one}) for i in range(self.carrier_dim)]

    def __add__(self, other: "Subspace") -> "Subspace":
        if other.carrier_dim != self.carrier_dim:
            raise DimensionMismatch("subspaces of different carriers")
        order = self.order * other.order // gcd(self.order, other.order)
        return Subspace.span(list(self.rows) + list(other.rows), self.carrier_dim, order)

    def annihilator(self) -> "Subspace":
        """Functionals vanishing on the subspace, in dual-basis coordinates."""
        return Subspace.span(nullspace(list(self.rows), self.order, list(range(self.carrier_dim))),
                             self.carrier_dim, self.order)

    def to_json(self, full: bool = True) -> Dict[str, Any]:
        data: Dict[str, Any] = {"dim": self.carrier_dim, "rank": self.dim, "pivots": list(self.pivots)}
        if full:
            data["rows"] = [
                [row[k].to_json() if k in row else 0 for k in range(self.carrier_dim)] for row in self.rows
            ]
        return data

    @classmethod
    def from_json(cls, data: Dict[str, Any], order: int = 1) -> "Subspace":
        try:
            dim = int(data["dim"])
            vectors = []
            for row in data["rows"]:
                if len(row) != dim:
                    raise DimensionMismatch(f"row of length {len(row)} in a space of dimension {dim}")
                vectors.append({k: CycloNumber.from_json(s, order) for k, s in enumerate(row)})
        except (KeyError, TypeError, ValueError) as e:
            raise InputFormatError(f"malformed Subspace JSON: {e}")
        return cls.span([{k: v for k, v in vec.items() if v} for vec in vectors], dim, order)


def is_subcoalgebra(h: HopfData, space: Subspace) -> bool:
    """Delta(space) inside space (x) space."""
    proj = space.projections()
    for row in space.rows:
        delta = h.coproduct(row)
        left: Dict[Tuple[int, int], CycloNumber] = {}
        right: Dict[Tuple[int, int], CycloNumber] = {}
        for (a, b), c in delta.items():
            for x, u in proj[a].items():
                add_into(left, {(x, b): c * u})
            for y, v in proj[b].items():
                add_into(right, {(a, y): c * v})
        if left or right:
            return False
    return True


def restrict_coalgebra(h: HopfData, space: Subspace, labels: Sequence[str] = None) -> HopfData:
    """The subcoalgebra on the rows of space, in row coordinates."""
    comult = {}
    counit = {}
    pivot_pos = {p: r for r, p in enumerate(space.pivots)}
    for r, row in enumerate(space.rows):
        tensor = {}
        for (a, b), c in h.coproduct(row).items():
            if a in pivot_pos and b in pivot_pos:
                tensor[(pivot_pos[a], pivot_pos[b])] = c
        comult[r] = tensor
        e = h.counit_of(row)
        if e:
            counit[r] = e
    if labels is None:
        labels = [row_label(h, row, r) for r, row in enumerate(space.rows)]
    return HopfData(dim=space.dim, order=h.order, labels=list(labels), comult=comult,
                    counit=counit, level="coalgebra", name=f"{h.name}|sub" if h.name else "")


def row_label(h: HopfData, row: Vector, r: int) -> str:
    if len(row) == 1:
        (k, c), = row.items()
        if c.is_one():
            return h.labels[k]
    return f"v{r}"
