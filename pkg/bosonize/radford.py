"""
Radford splittings: the projection Pi = id * (i S pi), the space of right
coinvariants R_H = Pi(H) and its braided coproduct.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from coradical import Subspace
from errors import NotInR, SplittingViolation
from exactfield import CycloNumber, add_into, sub_vectors
from tensorcore import (
    CheckResult,
    HopfData,
    VerificationReport,
    antipode_map,
    apply_map,
    collect_witnesses,
    compose_maps,
    convolve,
    identity_map,
)

logger = logging.getLogger(__name__)

Vector = Dict[int, CycloNumber]
Tensor = Dict[Tuple[int, int], CycloNumber]
LinearMap = Dict[int, Vector]


@dataclass
class RadfordSplitting:
    """
    Hopf maps pi: H -> H' and i: H' -> H with pi o i = id.

    proj[j] is pi(b_j) in H' and incl[k] is i(b'_k) in H.
    """
    H: HopfData
    hp: HopfData
    proj: LinearMap
    incl: LinearMap

    def pi(self, x: Vector) -> Vector:
        return apply_map(self.proj, x)

    def i(self, y: Vector) -> Vector:
        return apply_map(self.incl, y)


def _tensor_map(f: LinearMap, g: LinearMap, t: Tensor) -> Tensor:
    out: Tensor = {}
    for (a, b), c in t.items():
        for k, u in f.get(a, {}).items():
            for l, v in g.get(b, {}).items():
                add_into(out, {(k, l): c * u * v})
    return out


def _hopf_map_checks(name: str, f: LinearMap, src: HopfData, dst: HopfData,
                     exhaustive: bool, threads: int) -> List[CheckResult]:
    """f commutes with multiplication, unit, comultiplication, counit and antipode."""

    def mult_probe(a: int) -> List[List[int]]:
        found = []
        for b in range(src.dim):
            lhs = apply_map(f, src.basis_product(a, b))
            rhs = dst.product(f.get(a, {}), f.get(b, {}))
            if sub_vectors(lhs, rhs):
                found.append([a, b])
                if not exhaustive:
                    return found
        return found

    def comult_probe(a: int) -> List[List[int]]:
        lhs = dst.coproduct(f.get(a, {}))
        rhs = _tensor_map(f, f, src.basis_coproduct(a))
        bad = sub_vectors(lhs, rhs)
        bad = bad or dst.counit_of(f.get(a, {})) != src.counit_of(src.basis_vector(a))
        return [[a]] if bad else []

    def antipode_probe(a: int) -> List[List[int]]:
        lhs = apply_map(f, src.antipode_of(src.basis_vector(a)))
        rhs = dst.antipode_of(f.get(a, {}))
        return [[a]] if sub_vectors(lhs, rhs) else []

    unit_ok = not sub_vectors(apply_map(f, src.unit_vector()), dst.unit_vector())
    return [
        collect_witnesses(f"{name}_multiplicative", mult_probe, range(src.dim), exhaustive, threads),
        CheckResult(name=f"{name}_unit", passed=unit_ok, witness=None if unit_ok else [-1]),
        collect_witnesses(f"{name}_comultiplicative", comult_probe, range(src.dim), exhaustive, threads),
        collect_witnesses(f"{name}_antipode", antipode_probe, range(src.dim), exhaustive, threads),
    ]


def verify_splitting(s: RadfordSplitting, exhaustive: bool = False, threads: int = 1) -> VerificationReport:
    report = VerificationReport(subject=f"splitting {s.H.name or 'H'} -> {s.hp.name or 'H prime'}")
    composite = compose_maps(s.proj, s.incl, s.hp.dim)
    bad = [k for k in range(s.hp.dim) if sub_vectors(composite.get(k, {}), s.hp.basis_vector(k))]
    report.add(CheckResult(name="pi_after_i", passed=not bad, witness=bad[:1] or None))
    for check in _hopf_map_checks("pi", s.proj, s.H, s.hp, exhaustive, threads):
        report.add(check)
    for check in _hopf_map_checks("i", s.incl, s.hp, s.H, exhaustive, threads):
        report.add(check)
    return report


def radford_projection(s: RadfordSplitting, check: bool = True, threads: int = 1) -> Tuple[LinearMap, Subspace]:
    """
    Pi = id * (i o S o pi) and its image R_H.

    Returns:
        (Pi as an endomorphism of H, R_H as a Subspace of H)

    Raises:
        SplittingViolation: pi o i is not the identity or pi, i are not Hopf maps
    """
    if check:
        report = verify_splitting(s, threads=threads)
        if not report.passed:
            failed = ", ".join(f"{c.name} at {c.witness}" for c in report.failed_checks)
            raise SplittingViolation(failed)
    H = s.H
    i_s_pi = compose_maps(s.incl, compose_maps(antipode_map(s.hp), s.proj, H.dim), H.dim)
    Pi = convolve(identity_map(H.dim, H.order), i_s_pi, H)
    R_H = Subspace.span(Pi.values(), H.dim, H.order)
    logger.info(f"Radford projection on {H.name or 'H'}: dim R_H = {R_H.dim}, dim H' = {s.hp.dim}")
    return Pi, R_H


def radford_report(s: RadfordSplitting, Pi: LinearMap, R_H: Subspace) -> VerificationReport:
    """Idempotence of Pi, identity on R_H, closure of R_H under products and the dimension count."""
    H = s.H
    report = VerificationReport(subject=f"Radford projection of {H.name or 'H'}")
    report.metadata.update({"dim_R_H": R_H.dim, "dim_Hp": s.hp.dim, "dim_H": H.dim})
    bad = [j for j in range(H.dim) if sub_vectors(apply_map(Pi, Pi.get(j, {})), Pi.get(j, {}))]
    report.add(CheckResult(name="idempotent", passed=not bad, witness=bad[:1] or None))
    bad = [k for k, row in enumerate(R_H.rows) if sub_vectors(apply_map(Pi, row), row)]
    report.add(CheckResult(name="identity_on_image", passed=not bad, witness=bad[:1] or None))
    bad = [[a, b] for a, x in enumerate(R_H.rows) for b, y in enumerate(R_H.rows) if not R_H.contains(H.product(x, y))]
    report.add(CheckResult(name="multiplication_closed", passed=not bad, witness=bad[0] if bad else None))
    ok = R_H.dim * s.hp.dim == H.dim
    report.add(CheckResult(name="dimension_count", passed=ok,
                           detail=f"{R_H.dim} * {s.hp.dim} vs {H.dim}"))
    return report


def braided_coproduct(s: RadfordSplitting, r: Vector, Pi: Optional[LinearMap] = None) -> Tensor:
    """
    Delta_R(r) = (Pi (x) id) Delta(r) for r in R_H.

    Raises:
        NotInR: Pi(r) != r
    """
    if Pi is None:
        Pi, _ = radford_projection(s, check=False)
    if sub_vectors(apply_map(Pi, r), r):
        raise NotInR(f"{s.H.format_vector(r)} is not fixed by Pi")
    return _tensor_map(Pi, identity_map(s.H.dim, s.H.order), s.H.coproduct(r))


def _extended_coproduct(s: RadfordSplitting, Pi: LinearMap) -> Dict[int, Tensor]:
    """(Pi (x) id) Delta on every basis element; agrees with Delta_R on R_H."""
    identity = identity_map(s.H.dim, s.H.order)
    return {j: _tensor_map(Pi, identity, s.H.basis_coproduct(j)) for j in range(s.H.dim)}


def braided_coproduct_report(s: RadfordSplitting, Pi: LinearMap, R_H: Subspace) -> VerificationReport:
    """Delta_R lands in R_H (x) R_H, is coassociative and counital on R_H."""
    H = s.H
    report = VerificationReport(subject=f"braided coproduct of R_H in {H.name or 'H'}")
    delta = _extended_coproduct(s, Pi)

    def apply(t_vec: Vector) -> Tensor:
        out: Tensor = {}
        for j, c in t_vec.items():
            add_into(out, delta.get(j, {}), c)
        return out

    outside, noncoassoc, noncounital = [], [], []
    for k, row in enumerate(R_H.rows):
        t = apply(row)
        firsts: Dict[int, Vector] = {}
        seconds: Dict[int, Vector] = {}
        for (a, b), c in t.items():
            add_into(firsts.setdefault(b, {}), {a: c})
            add_into(seconds.setdefault(a, {}), {b: c})
        if any(not R_H.contains(v) for v in firsts.values()) or any(not R_H.contains(v) for v in seconds.values()):
            outside.append(k)
        left: Dict[Tuple[int, int, int], CycloNumber] = {}
        right: Dict[Tuple[int, int, int], CycloNumber] = {}
        for (a, b), c in t.items():
            for (x, y), e in delta.get(a, {}).items():
                add_into(left, {(x, y, b): c * e})
            for (x, y), e in delta.get(b, {}).items():
                add_into(right, {(a, x, y): c * e})
        if sub_vectors(left, right):
            noncoassoc.append(k)
        eps_left: Vector = {}
        eps_right: Vector = {}
        for (a, b), c in t.items():
            ea = H.counit_of(H.basis_vector(a))
            eb = H.counit_of(H.basis_vector(b))
            if ea:
                add_into(eps_left, {b: c * ea})
            if eb:
                add_into(eps_right, {a: c * eb})
        if sub_vectors(eps_left, row) or sub_vectors(eps_right, row):
            noncounital.append(k)
    report.add(CheckResult(name="lands_in_R_tensor_R", passed=not outside, witness=outside[:1] or None))
    report.add(CheckResult(name="coassociative", passed=not noncoassoc, witness=noncoassoc[:1] or None))
    report.add(CheckResult(name="counital", passed=not noncounital, witness=noncounital[:1] or None))
    return report
