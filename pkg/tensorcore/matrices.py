"""
Matrices whose entries are elements of a structure-constant algebra, the
block products odot and odot-prime, and the multiplicative/primitive matrix
checks.
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from exactfield import CycloNumber, add_into, is_independent, sub_vectors
from errors import CarrierMismatch, InputFormatError, ShapeMismatch
from .hopf_data import HopfData, Tensor, Vector

logger = logging.getLogger(__name__)


def outer(u: Vector, v: Vector) -> Tensor:
    return {(a, b): x * y for a, x in u.items() for b, y in v.items()}


@dataclass
class MatrixOverAlgebra:
    """rows x cols grid of vectors in the carrier of a HopfData."""
    carrier: HopfData
    entries: List[List[Vector]]

    def __post_init__(self):
        if not self.entries or not self.entries[0]:
            raise ShapeMismatch("matrix must have at least one row and one column")
        width = len(self.entries[0])
        if any(len(row) != width for row in self.entries):
            raise ShapeMismatch("ragged matrix rows")
        for row in self.entries:
            for vec in row:
                if any(not 0 <= k < self.carrier.dim for k in vec):
                    raise ShapeMismatch(f"entry outside carrier dimension {self.carrier.dim}")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def __getitem__(self, key) -> Vector:
        i, j = key
        return self.entries[i][j]

    def flat(self) -> List[Vector]:
        return [vec for row in self.entries for vec in row]

    @classmethod
    def identity(cls, carrier: HopfData, size: int = 1) -> "MatrixOverAlgebra":
        unit = carrier.unit_vector()
        return cls(carrier, [[dict(unit) if i == j else {} for j in range(size)] for i in range(size)])

    @classmethod
    def from_labels(cls, carrier: HopfData, grid: List[List[Dict[str, Any]]]) -> "MatrixOverAlgebra":
        """Build from entries given as {label: scalar} dicts."""
        entries = []
        for row in grid:
            out_row = []
            for entry in row:
                vec: Vector = {}
                for label, scalar in entry.items():
                    add_into(vec, {carrier.index_of(label): CycloNumber.coerce(scalar, carrier.order)})
                out_row.append(vec)
            entries.append(out_row)
        return cls(carrier, entries)

    def to_json(self) -> Dict[str, Any]:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[[[k, c.to_json()] for k, c in sorted(vec.items())] for vec in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, carrier: HopfData, data: Dict[str, Any]) -> "MatrixOverAlgebra":
        try:
            entries = []
            for row in data["entries"]:
                out_row = []
                for entry in row:
                    vec: Vector = {}
                    if isinstance(entry, dict):
                        for label, scalar in entry.items():
                            add_into(vec, {carrier.index_of(label): CycloNumber.from_json(scalar, carrier.order)})
                    else:
                        for k, scalar in entry:
                            add_into(vec, {int(k): CycloNumber.from_json(scalar, carrier.order)})
                    out_row.append(vec)
                entries.append(out_row)
        except (KeyError, TypeError, ValueError) as e:
            raise InputFormatError(f"malformed matrix JSON: {e}")
        return cls(carrier, entries)


def _same_carrier(A: MatrixOverAlgebra, B: MatrixOverAlgebra):
    if A.carrier is B.carrier:
        return
    if A.carrier.fingerprint() != B.carrier.fingerprint():
        raise CarrierMismatch("matrices live over different algebras")


def matrix_odot(A: MatrixOverAlgebra, B: MatrixOverAlgebra, variant: str = "odot") -> MatrixOverAlgebra:
    """
    Block products of matrices over an algebra.

    "odot" places a_ij * B in block (i, j); "odot_prime" places A * b_pq in
    block (p, q). Both give an (r*u) x (s*v) matrix for A r x s and B u x v.
    """
    _same_carrier(A, B)
    h = A.carrier
    r, s, u, v = A.rows, A.cols, B.rows, B.cols
    grid: List[List[Vector]] = [[{} for _ in range(s * v)] for _ in range(r * u)]
    for i in range(r):
        for j in range(s):
            for p in range(u):
                for q in range(v):
                    value = h.product(A.entries[i][j], B.entries[p][q])
                    if variant == "odot":
                        grid[i * u + p][j * v + q] = value
                    elif variant == "odot_prime":
                        grid[p * r + i][q * s + j] = value
                    else:
                        raise ValueError(f"unknown product variant {variant!r}")
    return MatrixOverAlgebra(h, grid)


@dataclass
class MatrixKindResult:
    """Outcome of verify_matrix_kind; truthy exactly when the kind holds."""
    kind: str
    holds: bool
    independent: Optional[bool] = None
    nontrivial: Optional[bool] = None
    witness: Optional[List[int]] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> Dict[str, Any]:
        data = {"kind": self.kind, "holds": self.holds}
        if self.independent is not None:
            data["independent"] = self.independent
        if self.nontrivial is not None:
            data["nontrivial"] = self.nontrivial
        if self.witness is not None:
            data["witness"] = self.witness
        if self.detail:
            data["detail"] = self.detail
        return data


def _multiplicative_witness(M: MatrixOverAlgebra) -> Optional[List[int]]:
    h = M.carrier
    n = M.rows
    one = h.one()
    for i in range(n):
        for j in range(n):
            expected: Tensor = {}
            for t in range(n):
                add_into(expected, outer(M.entries[i][t], M.entries[t][j]))
            if sub_vectors(h.coproduct(M.entries[i][j]), expected):
                return [i, j]
            if h.counit_of(M.entries[i][j]) != (one if i == j else h.zero()):
                return [i, j]
    return None


def verify_matrix_kind(
    M: MatrixOverAlgebra,
    kind: str,
    C: Optional[MatrixOverAlgebra] = None,
    D: Optional[MatrixOverAlgebra] = None,
    coradical=None,
) -> MatrixKindResult:
    """
    Check whether M is multiplicative, basic multiplicative, or (C, D)-primitive.

    Args:
        M: the matrix to test
        kind: "multiplicative", "basic_multiplicative" or "primitive"
        C, D: basic multiplicative matrices for the primitive kind
        coradical: optional Subspace; when given, primitive matrices also
            report whether some entry lies outside it

    Returns:
        MatrixKindResult, truthy iff the defining identities hold
    """
    h = M.carrier
    if not h.has_coalgebra:
        raise ShapeMismatch("matrix kinds need a comultiplication")

    if kind in ("multiplicative", "basic_multiplicative"):
        if M.rows != M.cols:
            raise ShapeMismatch(f"multiplicative matrices are square, got {M.rows}x{M.cols}")
        witness = _multiplicative_witness(M)
        holds = witness is None
        independent = None
        if kind == "basic_multiplicative":
            independent = is_independent(M.flat(), h.order)
            holds = holds and independent
        return MatrixKindResult(kind=kind, holds=holds, independent=independent, witness=witness)

    if kind != "primitive":
        raise ValueError(f"unknown matrix kind {kind!r}")
    if C is None or D is None:
        raise ShapeMismatch("primitive kind needs C and D")
    _same_carrier(M, C)
    _same_carrier(M, D)
    if C.rows != C.cols or D.rows != D.cols or M.rows != C.rows or M.cols != D.rows:
        raise ShapeMismatch(
            f"primitive matrix {M.rows}x{M.cols} does not fit C {C.rows}x{C.cols} and D {D.rows}x{D.cols}"
        )
    for name, base in (("C", C), ("D", D)):
        if not verify_matrix_kind(base, "basic_multiplicative"):
            return MatrixKindResult(kind=kind, holds=False, detail=f"{name} is not basic multiplicative")

    witness = None
    for i in range(M.rows):
        for j in range(M.cols):
            expected: Tensor = {}
            for k in range(M.rows):
                add_into(expected, outer(C.entries[i][k], M.entries[k][j]))
            for t in range(M.cols):
                add_into(expected, outer(M.entries[i][t], D.entries[t][j]))
            if sub_vectors(h.coproduct(M.entries[i][j]), expected):
                witness = [i, j]
                break
        if witness:
            break
    nontrivial = None
    if coradical is not None:
        nontrivial = any(not coradical.contains(vec) for vec in M.flat())
    return MatrixKindResult(kind=kind, holds=witness is None, nontrivial=nontrivial, witness=witness)
