"""
Radicals, coradicals, wedges and coradical filtrations.
"""
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from exactfield import CycloNumber, add_into, inverse_rows, left_kernel, nullspace
from errors import NonTerminating
from tensorcore import CheckResult, HopfData, VerificationReport, dualize, ordered_map
from .subspace import Subspace

logger = logging.getLogger(__name__)


def trace_form(a: HopfData) -> List[Dict[int, CycloNumber]]:
    """Gram matrix rows of (x, y) -> tr(L_{xy}) on the basis."""
    d = a.dim
    traces: Dict[int, CycloNumber] = {}
    for (i, k), vec in a.mult.items():
        c = vec.get(k)
        if c:
            traces[i] = traces[i] + c if i in traces else c
    rows: List[Dict[int, CycloNumber]] = [{} for _ in range(d)]
    for (x, y), vec in a.mult.items():
        total = None
        for i, c in vec.items():
            t = traces.get(i)
            if t:
                total = c * t if total is None else total + c * t
        if total:
            rows[x][y] = total
    return rows


def jacobson_radical(a: HopfData, check: bool = False) -> Subspace:
    """
    Radical of an algebra in characteristic zero: the kernel of the trace form.

    Args:
        a: algebra-level structure constants
        check: also confirm the result is a nilpotent two-sided ideal

    Returns:
        Subspace J = {x : tr(L_{xy}) = 0 for all y}
    """
    radical = Subspace.span(nullspace(trace_form(a), a.order, list(range(a.dim))), a.dim, a.order)
    logger.info(f"Jacobson radical of dimension {radical.dim} in an algebra of dimension {a.dim}")
    if check and not is_nilpotent_ideal(a, radical):
        logger.error("trace-form kernel is not a nilpotent ideal; multiplication table is inconsistent")
    return radical


def is_nilpotent_ideal(a: HopfData, space: Subspace) -> bool:
    """Two-sided ideal with space^d = 0."""
    for row in space.rows:
        for j in range(a.dim):
            basis = {j: CycloNumber.one(a.order)}
            if not space.contains(a.product(row, basis)) or not space.contains(a.product(basis, row)):
                return False
    power = space
    for _ in range(a.dim):
        if power.dim == 0:
            return True
        products = [a.product(x, y) for x in power.rows for y in space.rows]
        power = Subspace.span(products, a.dim, a.order)
    return power.dim == 0


def coradical(h: HopfData) -> Subspace:
    """H_0 as the annihilator of the radical of the dual algebra."""
    radical = jacobson_radical(dualize(h))
    h0 = radical.annihilator()
    logger.info(f"Coradical of dimension {h0.dim} in a coalgebra of dimension {h.dim}")
    return h0


def wedge(h: HopfData, U: Subspace, V: Subspace) -> Subspace:
    """U ^ V = kernel of (pi_U (x) pi_V) o Delta."""
    proj_u = U.projections()
    proj_v = V.projections()
    images = []
    for i in range(h.dim):
        image: Dict[Tuple[int, int], CycloNumber] = {}
        for (a, b), c in h.basis_coproduct(i).items():
            pa = proj_u[a]
            pb = proj_v[b]
            if not pa or not pb:
                continue
            for x, u in pa.items():
                cu = c * u
                for y, v in pb.items():
                    add_into(image, {(x, y): cu * v})
        images.append(image)
    kernel = left_kernel(images, h.order)
    return Subspace.span(kernel, h.dim, h.order)


def coradical_filtration(h: HopfData, h0: Optional[Subspace] = None) -> List[Subspace]:
    """
    H_0 c H_1 c ... with H_n = H_{n-1} ^ H_0, ending at the whole space.

    Raises:
        NonTerminating: when a step fails to grow below full dimension
    """
    base = h0 if h0 is not None else coradical(h)
    chain = [base]
    while chain[-1].dim < h.dim:
        nxt = wedge(h, chain[-1], base)
        if nxt.dim <= chain[-1].dim:
            raise NonTerminating(
                f"coradical filtration stalled at dimension {chain[-1].dim} of {h.dim}; "
                f"comultiplication is probably not coassociative"
            )
        chain.append(nxt)
        logger.info(f"H_{len(chain) - 1} has dimension {nxt.dim}")
    return chain


def dual_chevalley_property(h: HopfData, h0: Subspace) -> bool:
    """Coradical closed under multiplication and the antipode and containing 1."""
    if not h0.contains(h.unit_vector()):
        return False
    for x in h0.rows:
        for y in h0.rows:
            if not h0.contains(h.product(x, y)):
                return False
        if h.has_antipode and not h0.contains(h.antipode_of(x)):
            return False
    return True


def grading_report(h: HopfData, grading: Sequence[Subspace],
                   filtration: Optional[List[Subspace]] = None, threads: int = 1) -> VerificationReport:
    """
    Check that a grading H = (+) H(n) is a coradical grading.

    The components must be independent and spanning, multiplication and
    comultiplication must respect degrees, and the partial sums must equal
    the coradical filtration.
    """
    report = VerificationReport(subject="coradical grading")
    d = h.dim
    basis_rows = [row for comp in grading for row in comp.rows]
    owner = [(n, r) for n, comp in enumerate(grading) for r in range(comp.dim)]
    spanning = len(basis_rows) == d and Subspace.span(basis_rows, d, h.order).dim == d
    report.add(CheckResult(name="components_span", passed=spanning,
                           detail="" if spanning else f"components give {len(basis_rows)} vectors of rank < {d}"))
    if not spanning:
        return report

    # coordinates of each standard basis vector, split by degree
    coords = inverse_rows(basis_rows, h.order, d)
    split: List[Dict[int, Dict[int, CycloNumber]]] = []
    for k in range(d):
        parts: Dict[int, Dict[int, CycloNumber]] = {}
        for pos, c in coords[k].items():
            n, r = owner[pos]
            parts.setdefault(n, {})[pos] = c
        split.append(parts)

    def degrees_of(vec: Dict[int, CycloNumber]) -> Dict[int, Dict[int, CycloNumber]]:
        acc: Dict[int, Dict[int, CycloNumber]] = {}
        for k, c in vec.items():
            for n, part in split[k].items():
                add_into(acc.setdefault(n, {}), part, c)
        return {n: part for n, part in acc.items() if part}

    unit_degrees = set(degrees_of(h.unit_vector()))
    report.add(CheckResult(name="unit_in_degree_zero", passed=unit_degrees <= {0}))

    if h.has_algebra:
        bad = None
        for n, comp in enumerate(grading):
            for m, other in enumerate(grading):
                for x in comp.rows:
                    for y in other.rows:
                        degs = set(degrees_of(h.product(x, y)))
                        if degs - {n + m}:
                            bad = [n, m]
                            break
                    if bad:
                        break
                if bad:
                    break
            if bad:
                break
        report.add(CheckResult(name="multiplication_graded", passed=bad is None, witness=bad))

    def comult_probe(n: int) -> List[List[int]]:
        for x in grading[n].rows:
            blocks: Dict[Tuple[int, int], Dict[Tuple[int, int], CycloNumber]] = {}
            for (a, b), c in h.coproduct(x).items():
                for p, left in split[a].items():
                    for q, right in split[b].items():
                        block = blocks.setdefault((p, q), {})
                        for s, u in left.items():
                            for t, v in right.items():
                                add_into(block, {(s, t): c * u * v})
            for (p, q), block in sorted(blocks.items()):
                if block and p + q != n:
                    return [[n, p, q]]
        return []

    found = [w for ws in ordered_map(comult_probe, list(range(len(grading))), threads) for w in ws]
    report.add(CheckResult(name="comultiplication_graded", passed=not found, witnesses=found[:1]))

    if filtration is None:
        filtration = coradical_filtration(h)
    partial = []
    acc: List[Dict[int, CycloNumber]] = []
    for comp in grading:
        acc = acc + list(comp.rows)
        partial.append(Subspace.span(acc, d, h.order))
    while len(partial) > 1 and partial[-1].dim == partial[-2].dim:
        partial.pop()
    matches = len(partial) == len(filtration) and all(p == f for p, f in zip(partial, filtration))
    report.add(CheckResult(
        name="partial_sums_match_filtration",
        passed=matches,
        detail="" if matches else f"partial sums {[p.dim for p in partial]} vs filtration {[f.dim for f in filtration]}",
    ))
    return report


def check_coradically_graded(h: HopfData, grading: Sequence[Subspace]) -> bool:
    return grading_report(h, grading).passed
