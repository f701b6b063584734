"""
The Radford biproduct R x H' of a braided Hopf algebra and its base Hopf algebra.
"""
import logging
from math import lcm
from typing import Dict, List, Optional, Tuple

from errors import YDViolation
from exactfield import CycloNumber, add_into
from tensorcore import HopfData
from .radford import RadfordSplitting
from .yd import YDData, braided_antipode, verify_yd

logger = logging.getLogger(__name__)

Vector = Dict[int, CycloNumber]
Tensor = Dict[Tuple[int, int], CycloNumber]


def smash_label(r_label: str, h_label: str) -> str:
    if r_label == "1":
        return h_label
    if h_label == "1":
        return r_label
    return f"{r_label}{h_label}"


def _pair_index(r: int, h: int, dim_hp: int) -> int:
    return r * dim_hp + h


def bosonize(d: YDData, check: bool = True, exhaustive: bool = False, threads: int = 1) -> HopfData:
    """
    Radford biproduct on the basis r # h, index r * dim H' + h.

      (r # h)(r' # h') = sum r (h_(1) . r') # h_(2) h'
      Delta(r # h)     = sum r_(1) # (r_(2))_(-1) h_(1) (x) (r_(2))_(0) # h_(2)
      eps(r # h)       = eps_R(r) eps(h)
      S(r # h)         = (1 # S(r_(-1) h)) (S_R(r_(0)) # 1)

    Args:
        d: Yetter-Drinfeld data
        check: run verify_yd first
        exhaustive, threads: passed to verify_yd

    Returns:
        Hopf-level HopfData of dimension dim R * dim H'

    Raises:
        YDViolation: the Yetter-Drinfeld checks fail or S_R cannot be built
    """
    if check:
        report = verify_yd(d, exhaustive, threads)
        if not report.passed:
            failed = ", ".join(f"{c.name} at {c.witness}" for c in report.failed_checks)
            raise YDViolation(f"{d.name}: {failed}")
    R, hp = d.R, d.hp
    dr, dh = R.dim, hp.dim
    order = lcm(R.order, hp.order)
    S_R = d.braided_antipode or braided_antipode(d)

    def smash(x: Vector, y: Vector) -> Vector:
        out: Vector = {}
        for i, a in x.items():
            r, h = divmod(i, dh)
            for j, b in y.items():
                r2, h2 = divmod(j, dh)
                for (h1, h1b), c in hp.basis_coproduct(h).items():
                    moved = d.action.get((h1, r2))
                    if not moved:
                        continue
                    right = hp.basis_product(h1b, h2)
                    if not right:
                        continue
                    for s, e in moved.items():
                        for k, f in R.basis_product(r, s).items():
                            for l, g in right.items():
                                add_into(out, {_pair_index(k, l, dh): a * b * c * e * f * g})
        return out

    mult: Dict[Tuple[int, int], Vector] = {}
    for i in range(dr * dh):
        for j in range(dr * dh):
            vec = smash({i: CycloNumber.one(order)}, {j: CycloNumber.one(order)})
            if vec:
                mult[(i, j)] = vec

    comult: Dict[int, Tensor] = {}
    for r in range(dr):
        for h in range(dh):
            tensor: Tensor = {}
            for (r1, r2), c in R.basis_coproduct(r).items():
                for (g, r20), e in d.coaction.get(r2, {}).items():
                    for (h1, h2), f in hp.basis_coproduct(h).items():
                        for k, u in hp.basis_product(g, h1).items():
                            add_into(tensor, {(_pair_index(r1, k, dh), _pair_index(r20, h2, dh)): c * e * f * u})
            comult[_pair_index(r, h, dh)] = tensor

    counit: Vector = {}
    for r, a in R.counit.items():
        for h, b in hp.counit.items():
            add_into(counit, {_pair_index(r, h, dh): a * b})
    unit = {_pair_index(0, h, dh): c for h, c in hp.unit_vector().items()}

    antipode: Dict[int, Vector] = {}
    for r in range(dr):
        for h in range(dh):
            image: Vector = {}
            for (g, r0), c in d.coaction.get(r, {}).items():
                left = {_pair_index(0, k, dh): v for k, v in hp.antipode_of(hp.basis_product(g, h)).items()}
                right = {_pair_index(s, k, dh): v * u for s, v in S_R.get(r0, {}).items()
                         for k, u in hp.unit_vector().items()}
                add_into(image, smash(left, right), c)
            antipode[_pair_index(r, h, dh)] = image

    generators: Optional[List[int]] = None
    unit_h = hp.unit_vector()
    if hp.generators is not None and R.generators is not None and len(unit_h) == 1:
        (u, c), = unit_h.items()
        if c.is_one():
            generators = [_pair_index(r, u, dh) for r in R.generators] + [_pair_index(0, g, dh) for g in hp.generators]

    labels = [smash_label(R.labels[r], hp.labels[h]) for r in range(dr) for h in range(dh)]
    H = HopfData(
        dim=dr * dh,
        order=order,
        labels=labels,
        mult=mult,
        unit=unit,
        comult=comult,
        counit=counit,
        antipode=antipode,
        level="hopf",
        generators=generators,
        name=f"{d.name} x {hp.name}" if d.name else "",
    )
    logger.info(f"Bosonized {d.name}: dim {H.dim} = {dr} * {dh}")
    return H


def embed_r(d: YDData, r: Vector) -> Vector:
    """r -> r # 1."""
    dh = d.hp.dim
    return {_pair_index(s, h, dh): a * b for s, a in r.items() for h, b in d.hp.unit_vector().items()}


def embed_hp(d: YDData, h: Vector) -> Vector:
    """h -> 1 # h."""
    return {_pair_index(0, k, d.hp.dim): a for k, a in h.items()}


def canonical_splitting(d: YDData, H: HopfData) -> RadfordSplitting:
    """pi(r # h) = eps_R(r) h and i(h) = 1 # h."""
    dh = d.hp.dim
    proj: Dict[int, Vector] = {}
    for r, a in d.R.counit.items():
        for h in range(dh):
            proj[_pair_index(r, h, dh)] = {h: a}
    incl = {h: embed_hp(d, d.hp.basis_vector(h)) for h in range(dh)}
    return RadfordSplitting(H=H, hp=d.hp, proj=proj, incl=incl)
