"""
Duality and convolution on structure-constant data.
"""
import logging
from typing import Dict

from exactfield import add_into
from errors import DimensionMismatch
from .hopf_data import HopfData, LinearMap, Tensor, Vector

logger = logging.getLogger(__name__)

_DUAL_LEVEL = {"algebra": "coalgebra", "coalgebra": "algebra", "bialgebra": "bialgebra", "hopf": "hopf"}


def _dual_label(label: str) -> str:
    return label[:-1] if label.endswith("*") else label + "*"


def dualize(h: HopfData) -> HopfData:
    """
    Dual structure on the dual basis e^0..e^{d-1}.

    Multiplication and comultiplication trade places (e^a e^b = sum_i
    Delta(b_i)[a, b] e^i), unit and counit trade places and the antipode is
    transposed. Applying it twice returns the original data.
    """
    mult = None
    if h.comult is not None:
        mult: Dict = {}
        for i, tensor in h.comult.items():
            for (a, b), c in tensor.items():
                mult.setdefault((a, b), {})[i] = c
    comult = None
    if h.mult is not None:
        comult: Dict[int, Tensor] = {}
        for (j, k), vec in h.mult.items():
            for i, c in vec.items():
                comult.setdefault(i, {})[(j, k)] = c
    antipode = None
    if h.antipode is not None:
        antipode: Dict[int, Vector] = {}
        for j, vec in h.antipode.items():
            for i, c in vec.items():
                antipode.setdefault(i, {})[j] = c

    return HopfData(
        dim=h.dim,
        order=h.order,
        labels=[_dual_label(label) for label in h.labels],
        mult=mult,
        unit=dict(h.counit) if h.counit is not None else None,
        comult=comult,
        counit=dict(h.unit) if h.unit is not None else None,
        antipode=antipode,
        level=_DUAL_LEVEL[h.level],
        generators=h.dual_generators,
        dual_generators=h.generators,
        name=_dual_label(h.name) if h.name else "",
    )


def _check_map(f: LinearMap, dim: int, what: str):
    for j, image in f.items():
        if not 0 <= j < dim or any(not 0 <= i < dim for i in image):
            raise DimensionMismatch(f"{what} does not act on a space of dimension {dim}")


def convolve(f: LinearMap, g: LinearMap, h: HopfData) -> LinearMap:
    """(f*g)(x) = sum f(x_(1)) g(x_(2)) for endomorphisms of a bialgebra."""
    if not h.has_algebra or not h.has_coalgebra:
        raise DimensionMismatch("convolution needs both multiplication and comultiplication")
    _check_map(f, h.dim, "left factor")
    _check_map(g, h.dim, "right factor")
    result: LinearMap = {}
    for i in range(h.dim):
        image: Vector = {}
        for (a, b), c in h.basis_coproduct(i).items():
            fa = f.get(a)
            gb = g.get(b)
            if fa and gb:
                add_into(image, h.product(fa, gb), c)
        if image:
            result[i] = image
    return result


def unit_counit_map(h: HopfData) -> LinearMap:
    """x -> eps(x) 1, the unit of the convolution algebra."""
    unit = h.unit_vector()
    result: LinearMap = {}
    for i, e in h.counit.items():
        result[i] = {k: v * e for k, v in unit.items()}
    return result


def antipode_map(h: HopfData) -> LinearMap:
    return {j: dict(vec) for j, vec in (h.antipode or {}).items()}
