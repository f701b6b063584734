"""
The polynomials H1, H2, H3 in t and the root-of-unity vanishing criterion.
"""
import logging
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Callable, Dict, Iterator, Optional, Tuple

from errors import BadParams
from exactfield import CycloNumber, primitive_root_order

logger = logging.getLogger(__name__)

VARIANTS = ("H1", "H2", "H3")


@dataclass
class CombiPolynomial:
    """Integer polynomial in t stored as exponent -> coefficient, without zero terms."""
    coeffs: Dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        self.coeffs = {e: c for e, c in self.coeffs.items() if c}

    def add_term(self, exponent: int, coeff: int = 1):
        value = self.coeffs.get(exponent, 0) + coeff
        if value:
            self.coeffs[exponent] = value
        else:
            self.coeffs.pop(exponent, None)

    def __add__(self, other: "CombiPolynomial") -> "CombiPolynomial":
        out = CombiPolynomial(dict(self.coeffs))
        for e, c in other.coeffs.items():
            out.add_term(e, c)
        return out

    def shifted(self, k: int) -> "CombiPolynomial":
        return CombiPolynomial({e + k: c for e, c in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, CombiPolynomial) and self.coeffs == other.coeffs

    def evaluate(self, z: CycloNumber) -> CycloNumber:
        total = CycloNumber.zero(z.order)
        for e, c in self.coeffs.items():
            total = total + (z ** e) * c
        return total

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*t^{e}" for e, c in sorted(self.coeffs.items()))

    def to_json(self) -> Dict:
        return {"terms": [[e, c] for e, c in sorted(self.coeffs.items())], "text": str(self)}


def bounded_tuples(length: int, bound: int) -> Iterator[Tuple[int, ...]]:
    """Tuples of nonnegative integers of the given length with sum at most bound."""
    if length == 0:
        yield ()
        return
    for first in range(bound + 1):
        for rest in bounded_tuples(length - 1, bound - first):
            yield (first,) + rest


def _weighted(length: int, bound: int, top_weight: int) -> CombiPolynomial:
    """sum over (n_1..n_length) with sum <= bound of t^(sum (top_weight + 1 - i) n_i)."""
    poly = CombiPolynomial()
    if bound < 0:
        return poly
    for ns in bounded_tuples(length, bound):
        poly.add_term(sum((top_weight + 1 - i) * n for i, n in enumerate(ns, start=1)))
    return poly


def h1(m: int, l: int) -> CombiPolynomial:
    poly = CombiPolynomial()
    for ms in combinations_with_replacement(range(m - l + 1), l):
        poly.add_term(sum(ms))
    return poly


def h2(m: int, l: int) -> CombiPolynomial:
    return _weighted(l, m - l, l)


def h3(m: int, l: int) -> CombiPolynomial:
    return _weighted(l - 1, m - l, l - 1).shifted(m - l) + _weighted(l, m - l - 1, l)


_BUILDERS: Dict[str, Callable[[int, int], CombiPolynomial]] = {"H1": h1, "H2": h2, "H3": h3}


def combi_poly(variant: str, m: int, l: int) -> CombiPolynomial:
    """
    Enumerate H1, H2 or H3 at (m, l).

    Raises:
        BadParams: unknown variant or l outside 0 < l < m
    """
    if variant not in _BUILDERS:
        raise BadParams(f"unknown variant {variant!r}; expected one of {', '.join(VARIANTS)}")
    if not 0 < l < m:
        raise BadParams(f"need 0 < l < m, got m={m}, l={l}")
    return _BUILDERS[variant](m, l)


def check_H_identities(m: int, builders: Optional[Dict[str, Callable[[int, int], CombiPolynomial]]] = None) -> bool:
    """H1 = H2 = H3 for every 0 < l < m."""
    builders = {**_BUILDERS, **(builders or {})}
    for l in range(1, m):
        polys = [builders[v](m, l) for v in VARIANTS]
        if not (polys[0] == polys[1] == polys[2]):
            logger.info(f"identity fails at m={m}, l={l}: {' | '.join(str(p) for p in polys)}")
            return False
    return True


def check_vanishing_criterion(m: int, z: CycloNumber) -> bool:
    """
    Whether H1(m, l, z) = 0 for all 0 < l < m.

    The answer must coincide with z being a primitive m-th root of unity;
    a disagreement is logged as an error.
    """
    if m < 2:
        raise BadParams(f"vanishing criterion needs m >= 2, got {m}")
    vanish = all(h1(m, l).evaluate(z).is_zero() for l in range(1, m))
    primitive = primitive_root_order(z) == m
    if vanish != primitive:
        logger.error(f"vanishing of H1({m}, l, {z}) is {vanish} but primitivity is {primitive}")
    return vanish
