"""
Decomposition of a cosemisimple coalgebra into simple subcoalgebras.

The dual algebra is split by central idempotents. A random central element
is drawn, its minimal polynomial is factored over Q(zeta_n) and the
Lagrange idempotents of its roots cut the coalgebra into blocks.
"""
import logging
import random
from dataclasses import dataclass
from math import isqrt
from typing import Any, Dict, List, Optional, Sequence

from sympy import Poly, Symbol

from config import config, get_compute_settings
from errors import FieldTooSmall, InvalidHints, NotCosemisimple
from exactfield import (
    CycloNumber,
    add_into,
    cyclotomic_domain,
    nullspace,
    scale_vector,
    solve_combination,
    sub_vectors,
    vectors_equal,
)
from tensorcore import HopfData, dualize
from .filtration import coradical, jacobson_radical
from .subspace import Subspace, is_subcoalgebra, restrict_coalgebra, row_label

logger = logging.getLogger(__name__)

Vector = Dict[int, CycloNumber]


@dataclass(frozen=True)
class SimpleBlock:
    """A simple subcoalgebra of dimension comatrix_dim ** 2."""
    space: Subspace
    comatrix_dim: int
    label: str

    @property
    def dim(self) -> int:
        return self.space.dim

    def to_json(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "dim": self.dim,
            "comatrix_dim": self.comatrix_dim,
            "space": self.space.to_json(),
        }


def centre_basis(a: HopfData) -> List[Vector]:
    """Basis of the centre of an algebra: z with z b_j = b_j z for all j."""
    rows: Dict[tuple, Vector] = {}
    for (p, q), vec in a.mult.items():
        for k, c in vec.items():
            add_into(rows.setdefault((q, k), {}), {p: c})
            add_into(rows.setdefault((p, k), {}), {q: -c})
    return nullspace([r for r in rows.values() if r], a.order, list(range(a.dim)))


def _minimal_polynomial(a: HopfData, z: Vector, limit: int,
                        unit: Optional[Vector] = None) -> Optional[List[CycloNumber]]:
    """Coefficients c_0..c_k (low first, monic) of the minimal polynomial of z, taken in a corner when unit is given."""
    powers = [a.unit_vector() if unit is None else unit]
    for _ in range(limit):
        nxt = a.product(powers[-1], z)
        solution = solve_combination(powers, nxt, a.order)
        if solution is not None:
            k = len(powers)
            coeffs = [-solution.get(i, CycloNumber.zero(a.order)) for i in range(k)]
            coeffs.append(CycloNumber.one(a.order))
            return coeffs
        powers.append(nxt)
    return None


def _roots(coeffs: List[CycloNumber], order: int) -> List[CycloNumber]:
    """Roots of a polynomial that splits into linear factors over Q(zeta_order)."""
    K = cyclotomic_domain(order)
    t = Symbol("t")
    high_first = [c.embed(order).value if c.order != order else c.value for c in reversed(coeffs)]
    poly = Poly.from_list(high_first, t, domain=K)
    _, factors = poly.factor_list()
    roots = []
    for factor, _multiplicity in factors:
        if factor.degree() != 1:
            raise FieldTooSmall(
                f"central element has an irreducible factor of degree {factor.degree()} over Q(zeta_{order}); "
                f"enlarge the conductor or pass the simple subcoalgebras as hints"
            )
        lead, const = factor.rep.to_list()
        roots.append(-(CycloNumber(order, const) / CycloNumber(order, lead)))
    return roots


def _lagrange_idempotents(a: HopfData, z: Vector, roots: List[CycloNumber]) -> List[Vector]:
    unit = a.unit_vector()
    idempotents = []
    for s, lam in enumerate(roots):
        e = unit
        for r, mu in enumerate(roots):
            if r == s:
                continue
            shifted = add_into(dict(z), unit, -mu)
            e = scale_vector(a.product(e, shifted), (lam - mu).inverse())
        idempotents.append(e)
    return idempotents


def _cut(h0: HopfData, functional: Vector) -> Subspace:
    """Image of x -> sum <functional, x_2> x_1."""
    images = []
    for i in range(h0.dim):
        image: Vector = {}
        for (a, b), c in h0.basis_coproduct(i).items():
            f = functional.get(b)
            if f:
                add_into(image, {a: c * f})
        images.append(image)
    return Subspace.span(images, h0.dim, h0.order)


def dual_centre_dim(h0: HopfData, space: Subspace) -> int:
    block = restrict_coalgebra(h0, space)
    return len(centre_basis(dualize(block)))


def _evaluate(a: HopfData, coeffs_high: Sequence[CycloNumber], x: Vector, unit: Vector) -> Vector:
    result: Vector = {}
    for c in coeffs_high:
        result = add_into(a.product(result, x), unit, c)
    return result


def _corner(a: HopfData, e: Vector) -> Subspace:
    return Subspace.span((a.product(a.product(e, {j: CycloNumber.one(a.order)}), e) for j in range(a.dim)),
                         a.dim, a.order)


def _candidates(a: HopfData, rows: Sequence[Vector], rng: random.Random, attempts: int):
    yield from rows
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            yield add_into(dict(rows[i]), rows[j])
            yield sub_vectors(rows[i], rows[j])
            yield a.product(rows[i], rows[j])
    spread = 2 * len(rows) + 3
    for _ in range(attempts):
        x: Vector = {}
        for row in rows:
            add_into(x, row, CycloNumber.rational(rng.randint(-spread, spread), a.order))
        yield x


def _split_idempotent(a: HopfData, e: Vector, corner: Subspace, rng: random.Random,
                      attempts: int) -> Optional[Vector]:
    """A proper idempotent of eAe from an element whose minimal polynomial factors over Q(zeta_n)."""
    K = cyclotomic_domain(a.order)
    t = Symbol("t")
    for x in _candidates(a, corner.rows, rng, attempts):
        if not x:
            continue
        coeffs = _minimal_polynomial(a, x, corner.dim, unit=e)
        if coeffs is None or len(coeffs) <= 2:
            continue
        f = Poly.from_list([c.embed(a.order).value for c in reversed(coeffs)], t, domain=K)
        _, factors = f.factor_list()
        if len(factors) < 2:
            continue
        g = factors[0][0]
        s, _, _ = g.gcdex(f.exquo(g))
        projector = [CycloNumber(a.order, c) for c in (s * g).rem(f).rep.to_list()]
        return _evaluate(a, projector, x, e)
    return None


def is_split_block(h0: HopfData, space: Subspace, attempts: int = 16, seed: int = 0) -> bool:
    """
    Whether the dual of a simple block is a full matrix algebra over Q(zeta_n).

    Proper idempotents are split off until the corner eAe is one-dimensional.
    A corner that resists every candidate is reported as not split, which
    covers division algebras such as the rational quaternions.
    """
    a = dualize(restrict_coalgebra(h0, space))
    rng = random.Random(seed)
    e = a.unit_vector()
    corner = _corner(a, e)
    while corner.dim > 1:
        idempotent = _split_idempotent(a, e, corner, rng, attempts)
        if idempotent is None:
            logger.debug(f"no zero divisor found in a corner of dimension {corner.dim}")
            return False
        rest = sub_vectors(e, idempotent)
        e, corner = min(((idempotent, _corner(a, idempotent)), (rest, _corner(a, rest))), key=lambda p: p[1].dim)
    return True


def _require_split(h0: HopfData, spaces: Sequence[Subspace], seed: int, attempts: int) -> None:
    for space in spaces:
        if space.dim > 1 and not is_split_block(h0, space, attempts, seed):
            raise FieldTooSmall(
                f"simple block of dimension {space.dim} does not split over Q(zeta_{h0.order}); "
                f"its dual is not a full matrix algebra there, enlarge the conductor"
            )


def _block_order(space: Subspace, unit: Optional[Vector]):
    holds_unit = unit is not None and space.dim == 1 and space.contains(unit)
    rows = tuple(tuple((k, str(v)) for k, v in sorted(row.items())) for row in space.rows)
    return (not holds_unit, space.dim, space.pivots, rows)


def label_blocks(carrier: HopfData, spaces: Sequence[Subspace],
                 unit: Optional[Vector] = None) -> List[SimpleBlock]:
    """Order blocks (unit first, then by dimension and pivots) and name them k1, kg, ..., C, C2, ..."""
    blocks = []
    matrix_count = 0
    anonymous = 0
    for space in sorted(spaces, key=lambda s: _block_order(s, unit)):
        r = isqrt(space.dim)
        if r * r != space.dim:
            raise FieldTooSmall(
                f"simple block of dimension {space.dim} is not a full comatrix coalgebra; "
                f"enlarge the conductor or pass hints"
            )
        if space.dim == 1:
            row = space.rows[0]
            e = carrier.counit_of(row) if carrier.counit is not None else None
            g = scale_vector(row, e.inverse()) if e else row
            if unit is not None and vectors_equal(g, unit):
                label = "k1"
            elif len(g) == 1 and next(iter(g.values())).is_one():
                label = "k" + carrier.labels[next(iter(g))]
            else:
                anonymous += 1
                label = f"kg{anonymous}"
        else:
            matrix_count += 1
            label = "C" if matrix_count == 1 else f"C{matrix_count}"
        blocks.append(SimpleBlock(space=space, comatrix_dim=r, label=label))
    return blocks


def _verify_hints(h0: HopfData, hints: Sequence[Subspace]) -> List[Subspace]:
    total = 0
    for hint in hints:
        if hint.carrier_dim != h0.dim:
            raise InvalidHints(f"hint lives in dimension {hint.carrier_dim}, expected {h0.dim}")
        if not is_subcoalgebra(h0, hint):
            raise InvalidHints(f"hint of dimension {hint.dim} is not a subcoalgebra")
        if isqrt(hint.dim) ** 2 != hint.dim:
            raise InvalidHints(f"hint of dimension {hint.dim} is not a perfect square")
        if dual_centre_dim(h0, hint) != 1:
            raise InvalidHints(f"hint of dimension {hint.dim} is not simple")
        total += hint.dim
    joined = Subspace.zero(h0.dim, h0.order)
    for hint in hints:
        joined = joined + hint
    if joined.dim != total:
        raise InvalidHints("hints are not independent")
    if joined.dim != h0.dim:
        raise InvalidHints(f"hints span dimension {joined.dim} of {h0.dim}")
    return list(hints)


def simple_decomposition(h0: HopfData, hints: Optional[Sequence[Subspace]] = None,
                         unit: Optional[Vector] = None, seed: Optional[int] = None) -> List[SimpleBlock]:
    """
    Split a cosemisimple coalgebra into simple subcoalgebras.

    Args:
        h0: coalgebra-level data, cosemisimple
        hints: optional simple subcoalgebras to verify and adopt
        unit: vector to label "k1" when it spans a block
        seed: seed for the random central element

    Returns:
        SimpleBlocks in label_blocks order

    Raises:
        NotCosemisimple: the dual algebra has a nonzero radical
        FieldTooSmall: a central idempotent or a block does not split over Q(zeta_n)
        InvalidHints: hints fail verification
    """
    settings = get_compute_settings(config)
    seed = settings.get("random_seed", 0) if seed is None else seed
    attempts = int(settings.get("split_attempts", 8))

    if hints:
        spaces = _verify_hints(h0, hints)
        _require_split(h0, spaces, seed, attempts)
        return label_blocks(h0, spaces, unit)

    dual = dualize(h0)
    radical = jacobson_radical(dual)
    if radical.dim:
        raise NotCosemisimple(f"dual algebra has a radical of dimension {radical.dim}")

    centre = centre_basis(dual)
    logger.info(f"Dual centre has dimension {len(centre)}")
    if len(centre) == 1:
        spaces = [Subspace.full(h0.dim, h0.order)]
        _require_split(h0, spaces, seed, attempts)
        return label_blocks(h0, spaces, unit)

    rng = random.Random(seed)
    spread = 4 * h0.dim + 7
    for attempt in range(attempts):
        z: Vector = {}
        for basis in centre:
            add_into(z, basis, CycloNumber.rational(rng.randint(-spread, spread), h0.order))
        coeffs = _minimal_polynomial(dual, z, len(centre))
        if coeffs is None or len(coeffs) - 1 < len(centre):
            logger.debug(f"central element {attempt} does not separate the blocks, retrying")
            continue
        roots = _roots(coeffs, h0.order)
        if len(set(roots)) != len(centre):
            logger.debug(f"central element {attempt} has repeated roots, retrying")
            continue
        spaces = [_cut(h0, e) for e in _lagrange_idempotents(dual, z, roots)]
        _require_split(h0, spaces, seed, attempts)
        return label_blocks(h0, spaces, unit)

    raise FieldTooSmall(
        f"no separating central element found in {attempts} attempts over Q(zeta_{h0.order}); "
        f"pass the simple subcoalgebras as hints"
    )


def coradical_blocks(h: HopfData, hints: Optional[Sequence[Subspace]] = None,
                     h0: Optional[Subspace] = None) -> List[SimpleBlock]:
    """Simple subcoalgebras of h, embedded in the carrier of h."""
    if h0 is None:
        h0 = coradical(h)
    labels = [row_label(h, row, r) for r, row in enumerate(h0.rows)]
    sub = restrict_coalgebra(h, h0, labels)
    local_hints = None
    if hints:
        local_hints = []
        for hint in hints:
            if not h0.contains_subspace(hint):
                raise InvalidHints(f"hint of dimension {hint.dim} is not inside the coradical")
            local_hints.append(Subspace.span([h0.coordinates(row) for row in hint.rows], h0.dim, h.order))
    local = simple_decomposition(sub, local_hints)
    spaces = [
        Subspace.span([h0.from_coordinates(row) for row in block.space.rows], h.dim, h.order)
        for block in local
    ]
    unit = h.unit_vector() if h.unit is not None else None
    blocks = label_blocks(h, spaces, unit)
    logger.info(f"Simple subcoalgebras: {', '.join(f'{b.label} ({b.dim})' for b in blocks)}")
    return blocks
