"""
The based ring ZS of simple subcoalgebras.

Products of simple subcoalgebras are read off from characters: the
character of a comatrix block C of size r is its unique cocommutative
element with counit r, and chi_B chi_C = sum_t alpha_t chi_t with
nonnegative integers alpha_t.
"""
import logging
from dataclasses import dataclass, field
from math import isqrt
from typing import Any, Dict, List, Optional, Sequence, Tuple

from coradical import SimpleBlock, Subspace, coradical, coradical_blocks, dual_chevalley_property, restrict_coalgebra
from errors import ChevalleyViolation, InputFormatError
from exactfield import CycloNumber, add_into, nullspace, scale_vector, solve_combination
from tensorcore import HopfData, ordered_map

logger = logging.getLogger(__name__)

Vector = Dict[int, CycloNumber]


@dataclass
class BasedRingTable:
    """alpha[(i, j)][t] = coefficient of C_t in C_i C_j."""
    simples: List[str]
    dims: List[int]
    coeffs: Dict[Tuple[int, int], Dict[int, int]]
    involution: List[int]
    unit_index: int = 0
    notes: List[str] = field(default_factory=list)

    def __post_init__(self):
        n = len(self.simples)
        if len(self.dims) != n or len(self.involution) != n:
            raise InputFormatError("simples, dims and involution must have the same length")
        for (i, j), row in self.coeffs.items():
            for t, m in row.items():
                if not (0 <= i < n and 0 <= j < n and 0 <= t < n):
                    raise InputFormatError(f"alpha index ({i}, {j}, {t}) out of range")

    @property
    def size(self) -> int:
        return len(self.simples)

    @property
    def comatrix_dims(self) -> List[int]:
        return [isqrt(d) for d in self.dims]

    def alpha(self, i: int, j: int, t: int) -> int:
        return self.coeffs.get((i, j), {}).get(t, 0)

    def product(self, i: int, j: int) -> Dict[int, int]:
        return dict(self.coeffs.get((i, j), {}))

    def index_of(self, label: str) -> int:
        return self.simples.index(label)

    def perturbed(self, i: int, j: int, t: int, delta: int) -> "BasedRingTable":
        coeffs = {key: dict(row) for key, row in self.coeffs.items()}
        row = coeffs.setdefault((i, j), {})
        value = row.get(t, 0) + delta
        if value:
            row[t] = value
        else:
            row.pop(t, None)
        return BasedRingTable(list(self.simples), list(self.dims), coeffs, list(self.involution), self.unit_index)

    def to_json(self) -> Dict[str, Any]:
        alpha = [
            [i, j, t, m]
            for (i, j), row in sorted(self.coeffs.items())
            for t, m in sorted(row.items())
            if m
        ]
        return {
            "simples": self.simples,
            "dims": self.dims,
            "alpha": alpha,
            "involution": self.involution,
            "unit": self.unit_index,
            "notes": self.notes,
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "BasedRingTable":
        try:
            coeffs: Dict[Tuple[int, int], Dict[int, int]] = {}
            for i, j, t, m in data["alpha"]:
                coeffs.setdefault((int(i), int(j)), {})[int(t)] = int(m)
            return cls(
                simples=[str(s) for s in data["simples"]],
                dims=[int(d) for d in data["dims"]],
                coeffs=coeffs,
                involution=[int(k) for k in data["involution"]],
                unit_index=int(data.get("unit", 0)),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise InputFormatError(f"malformed based ring JSON: {e}")


def character(h: HopfData, block: SimpleBlock) -> Vector:
    """Cocommutative element of the block with counit equal to its comatrix size."""
    sub = restrict_coalgebra(h, block.space)
    rows: Dict[Tuple[int, int], Vector] = {}
    for r, tensor in sub.comult.items():
        for (a, b), c in tensor.items():
            if a == b:
                continue
            add_into(rows.setdefault((a, b), {}), {r: c})
            add_into(rows.setdefault((b, a), {}), {r: -c})
    solutions = nullspace([row for row in rows.values() if row], h.order, list(range(block.dim)))
    if len(solutions) != 1:
        raise ChevalleyViolation(
            f"block {block.label} has {len(solutions)} independent cocommutative elements, expected 1"
        )
    chi = block.space.from_coordinates(solutions[0])
    e = h.counit_of(chi)
    return scale_vector(chi, CycloNumber.rational(block.comatrix_dim, h.order) / e)


def _as_multiplicities(solution: Dict[int, CycloNumber], what: str) -> Dict[int, int]:
    out = {}
    for t, c in solution.items():
        value = int(c.rational_value().numerator) if c.is_integer() else -1
        if value < 0:
            raise ChevalleyViolation(f"{what} has coefficient {c}, not a nonnegative integer")
        out[t] = value
    return {t: m for t, m in out.items() if m}


def simple_product(h: HopfData, blocks: Sequence[SimpleBlock], i: int, j: int,
                   characters: Optional[List[Vector]] = None,
                   h0: Optional[Subspace] = None) -> Dict[int, int]:
    """
    Multiplicities of C_i C_j as a combination of the simple blocks.

    Raises:
        ChevalleyViolation: the product leaves the coradical
    """
    if characters is None:
        characters = [character(h, b) for b in blocks]
    b, c = blocks[i], blocks[j]
    if h0 is None:
        h0 = coradical(h)
    products = [h.product(x, y) for x in b.space.rows for y in c.space.rows]
    span = Subspace.span(products, h.dim, h.order)
    if not h0.contains_subspace(span):
        raise ChevalleyViolation(f"{b.label} * {c.label} is not contained in the coradical")

    chi = h.product(characters[i], characters[j])
    solution = solve_combination(characters, chi, h.order)
    if solution is None:
        raise ChevalleyViolation(f"character of {b.label} * {c.label} is not a combination of simple characters")
    mults = _as_multiplicities(solution, f"{b.label} * {c.label}")

    expected = Subspace.zero(h.dim, h.order)
    for t in mults:
        expected = expected + blocks[t].space
    if expected != span:
        logger.warning(f"span of {b.label} * {c.label} (dim {span.dim}) differs from its character support")
    if sum(m * blocks[t].comatrix_dim for t, m in mults.items()) != b.comatrix_dim * c.comatrix_dim:
        logger.warning(f"dimension count fails for {b.label} * {c.label}")
    return mults


def _involution(h: HopfData, blocks: Sequence[SimpleBlock], characters: List[Vector]) -> List[int]:
    result = []
    for i, chi in enumerate(characters):
        image = h.antipode_of(chi)
        match = [j for j, block in enumerate(blocks) if block.space.contains(image)]
        if len(match) != 1:
            raise ChevalleyViolation(f"antipode does not map {blocks[i].label} onto a simple block")
        result.append(match[0])
    return result


def build_based_ring(h: HopfData, blocks: Optional[Sequence[SimpleBlock]] = None,
                     h0: Optional[Subspace] = None, threads: int = 1) -> BasedRingTable:
    """
    The full alpha table of ZS, with the involution induced by the antipode.

    Raises:
        ChevalleyViolation: the coradical is not a Hopf subalgebra
    """
    if h0 is None:
        h0 = coradical(h)
    if not dual_chevalley_property(h, h0):
        raise ChevalleyViolation("coradical is not closed under multiplication and antipode")
    if blocks is None:
        blocks = coradical_blocks(h, h0=h0)
    blocks = list(blocks)
    characters = [character(h, b) for b in blocks]
    n = len(blocks)
    pairs = [(i, j) for i in range(n) for j in range(n)]
    rows = ordered_map(lambda p: simple_product(h, blocks, p[0], p[1], characters, h0), pairs, threads)
    coeffs = {pair: row for pair, row in zip(pairs, rows) if row}

    unit = h.unit_vector()
    unit_index = next((k for k, b in enumerate(blocks) if b.dim == 1 and b.space.contains(unit)), 0)
    table = BasedRingTable(
        simples=[b.label for b in blocks],
        dims=[b.dim for b in blocks],
        coeffs=coeffs,
        involution=_involution(h, blocks, characters),
        unit_index=unit_index,
    )
    logger.info(f"Based ring on {n} simple subcoalgebras")
    return table
