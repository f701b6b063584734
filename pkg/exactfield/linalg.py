"""
Exact sparse linear algebra over Q(zeta_n).

Vectors are dicts from a sortable key (an int basis index or a tuple of
them) to CycloNumber. Elimination is delegated to sympy's DomainMatrix in
sparse format over the cyclotomic domain.
"""
import logging
from math import gcd
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from .cyclo import CycloNumber, common_order, cyclotomic_domain

logger = logging.getLogger(__name__)

Vector = Dict[Hashable, CycloNumber]


def _to_domain(value: CycloNumber, order: int, K):
    value = value.embed(order) if value.order != order else value
    return value.value


def _from_domain(element, order: int) -> CycloNumber:
    return CycloNumber(order, element)


def vector_order(vectors: Iterable[Vector], order: int = 1) -> int:
    """Conductor large enough for every entry of the given vectors."""
    found = common_order([v for vec in vectors for v in vec.values()])
    return order * found // gcd(order, found)


def column_keys(rows: Iterable[Vector]) -> List[Hashable]:
    keys = set()
    for row in rows:
        keys.update(row.keys())
    return sorted(keys)


def rref(rows: Sequence[Vector], order: int, columns: Optional[Sequence[Hashable]] = None) -> Tuple[List[Vector], List[Hashable]]:
    """Reduced row echelon form of the given rows.

    Returns the nonzero rows (pivot entries equal to 1) and their pivot keys,
    both in increasing pivot order.
    """
    rows = [r for r in rows if r]
    if columns is None:
        columns = column_keys(rows)
    if not rows or not columns:
        return [], []
    K = cyclotomic_domain(order)
    index = {key: j for j, key in enumerate(columns)}
    data = {}
    for i, row in enumerate(rows):
        entries = {}
        for key, value in row.items():
            if value:
                entries[index[key]] = _to_domain(value, order, K)
        if entries:
            data[i] = entries
    matrix = DomainMatrix(data, (len(rows), len(columns)), K)
    reduced, pivots = matrix.rref()
    sparse = reduced.to_sparse().rep
    result = []
    for i in range(len(pivots)):
        row = sparse.get(i, {})
        result.append({columns[j]: _from_domain(v, order) for j, v in sorted(row.items()) if v})
    return result, [columns[p] for p in pivots]


def rank(rows: Sequence[Vector], order: int) -> int:
    return len(rref(rows, order)[1])


def nullspace(rows: Sequence[Vector], order: int, columns: Sequence[Hashable]) -> List[Vector]:
    """Basis of {v : row . v = 0 for every row}, one vector per free column."""
    reduced, pivots = rref(rows, order, columns)
    pivot_set = set(pivots)
    one = CycloNumber.one(order)
    basis = []
    for free in columns:
        if free in pivot_set:
            continue
        vec = {free: one}
        for row, p in zip(reduced, pivots):
            c = row.get(free)
            if c:
                vec[p] = -c
        basis.append(vec)
    return basis


def transpose(vectors: Sequence[Vector]) -> List[Vector]:
    """Rows indexed by the keys of the given vectors, columns by position."""
    by_key: Dict[Hashable, Vector] = {}
    for i, vec in enumerate(vectors):
        for key, value in vec.items():
            if value:
                by_key.setdefault(key, {})[i] = value
    return [by_key[k] for k in sorted(by_key)]


class _Slot:
    """Column marker for the identity block appended in left_kernel."""
    __slots__ = ("index",)

    def __init__(self, index: int):
        self.index = index

    def __hash__(self):
        return hash(("slot", self.index))

    def __eq__(self, other):
        return isinstance(other, _Slot) and other.index == self.index


def left_kernel(images: Sequence[Vector], order: int) -> List[Vector]:
    """Coefficient vectors lam (keyed by position) with sum lam_i images[i] = 0.

    Row-reduces [images | I]; rows whose pivot falls in the identity block
    carry the kernel.
    """
    if not images:
        return []
    one = CycloNumber.one(order)
    slots = [_Slot(i) for i in range(len(images))]
    rows = []
    for i, image in enumerate(images):
        row = dict(image)
        row[slots[i]] = one
        rows.append(row)
    columns = column_keys(images) + slots
    reduced, pivots = rref(rows, order, columns)
    kernel = []
    for row, pivot in zip(reduced, pivots):
        if isinstance(pivot, _Slot):
            kernel.append({key.index: value for key, value in row.items()})
    return kernel


def inverse_rows(vectors: Sequence[Vector], order: int, dim: int) -> List[Vector]:
    """Rows of B^-1 where B has the given vectors (over keys 0..dim-1) as rows.

    Row k of the result holds the coordinates of the k-th standard basis
    vector in the basis formed by the given vectors.
    """
    K = cyclotomic_domain(order)
    data = {}
    for i, vec in enumerate(vectors):
        entries = {k: _to_domain(v, order, K) for k, v in vec.items() if v}
        if entries:
            data[i] = entries
    matrix = DomainMatrix(data, (len(vectors), dim), K)
    inverse = matrix.inv().to_sparse().rep
    return [
        {j: _from_domain(v, order) for j, v in sorted(inverse.get(k, {}).items()) if v}
        for k in range(dim)
    ]


def solve_combination(vectors: Sequence[Vector], target: Vector, order: int) -> Optional[Dict[int, CycloNumber]]:
    """Coefficients x with sum x_i vectors[i] = target, or None if inconsistent.

    Free coefficients are set to zero, so the answer is unique exactly when
    the vectors are independent.
    """
    rows = transpose(list(vectors) + [target])
    n = len(vectors)
    reduced, pivots = rref(rows, order, list(range(n + 1)))
    if n in pivots:
        return None
    solution = {}
    for row, p in zip(reduced, pivots):
        c = row.get(n)
        if c:
            solution[p] = c
    return solution


def is_independent(vectors: Sequence[Vector], order: int) -> bool:
    return rank(vectors, order) == len(vectors)


# --- sparse vector helpers -------------------------------------------------

def add_into(acc: Vector, vec: Vector, scale: Optional[CycloNumber] = None) -> Vector:
    """acc += scale * vec, dropping zeros; returns acc."""
    for key, value in vec.items():
        term = value if scale is None else value * scale
        current = acc.get(key)
        total = term if current is None else current + term
        if total:
            acc[key] = total
        elif current is not None:
            del acc[key]
    return acc


def scale_vector(vec: Vector, scale: CycloNumber) -> Vector:
    if not scale:
        return {}
    return {k: v * scale for k, v in vec.items()}


def sub_vectors(a: Vector, b: Vector) -> Vector:
    result = dict(a)
    for key, value in b.items():
        current = result.get(key)
        total = -value if current is None else current - value
        if total:
            result[key] = total
        elif current is not None:
            del result[key]
    return result


def vectors_equal(a: Vector, b: Vector) -> bool:
    return not sub_vectors(a, b)
