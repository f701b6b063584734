"""
Small cosemisimple Hopf algebras used as the coradical side of a biproduct:
group algebras, their duals, and the 8-dimensional Kac-Paljutkin algebra H8.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
import itertools
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

from errors import BadParams
from exactfield import CycloNumber, add_into
from tensorcore import HopfData

logger = logging.getLogger(__name__)

Element = Hashable
ScalarMatrix = List[List[CycloNumber]]


@dataclass
class FiniteGroup:
    """A finite group given by its element list and product."""
    elements: List[Element]
    product: Callable[[Element, Element], Element]
    labels: List[str]
    name: str = ""

    def __post_init__(self):
        if len(self.labels) != len(self.elements):
            raise BadParams(f"{len(self.labels)} labels for {len(self.elements)} elements")
        self._index = {g: i for i, g in enumerate(self.elements)}
        identities = [e for e in self.elements if all(self.product(e, g) == g for g in self.elements)]
        if not identities:
            raise BadParams(f"group {self.name!r} has no identity element")
        self.identity = identities[0]

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, g: Element) -> int:
        return self._index[g]

    def inverse(self, g: Element) -> Element:
        for h in self.elements:
            if self.product(g, h) == self.identity:
                return h
        raise BadParams(f"{g!r} has no inverse in {self.name!r}")


def _power_label(symbol: str, exponent: int) -> str:
    if exponent == 0:
        return ""
    return symbol if exponent == 1 else f"{symbol}^{exponent}"


def cyclic_group(n: int, symbol: str = "g") -> FiniteGroup:
    if n < 1:
        raise BadParams(f"cyclic group order must be positive, got {n}")
    return FiniteGroup(
        elements=list(range(n)),
        product=lambda a, b: (a + b) % n,
        labels=[_power_label(symbol, a) or "1" for a in range(n)],
        name=f"Z{n}",
    )


def abelian_group(n1: int, n2: int, symbols: Tuple[str, str] = ("g", "h")) -> FiniteGroup:
    """Z_n1 x Z_n2 with elements (a, b) standing for g^a h^b."""
    if n1 < 1 or n2 < 1:
        raise BadParams(f"group orders must be positive, got {n1} and {n2}")
    elements = [(a, b) for a in range(n1) for b in range(n2)]
    return FiniteGroup(
        elements=elements,
        product=lambda x, y: ((x[0] + y[0]) % n1, (x[1] + y[1]) % n2),
        labels=[(_power_label(symbols[0], a) + _power_label(symbols[1], b)) or "1" for a, b in elements],
        name=f"Z{n1}xZ{n2}",
    )


def dihedral_group() -> FiniteGroup:
    """D8 = <x, y | x^4 = y^2 = 1, yx = x^-1 y>, element (p, q) = x^p y^q."""
    elements = [(p, q) for p in range(4) for q in range(2)]
    return FiniteGroup(
        elements=elements,
        product=lambda a, b: ((a[0] + (-1) ** a[1] * b[0]) % 4, (a[1] + b[1]) % 2),
        labels=[f"{p}{q}" for p, q in elements],
        name="D8",
    )


def quaternion_group() -> FiniteGroup:
    """Q8 = <x, y | x^4 = 1, y^2 = x^2, yx = x^-1 y>, element (p, q) = x^p y^q."""
    elements = [(p, q) for p in range(4) for q in range(2)]
    return FiniteGroup(
        elements=elements,
        product=lambda a, b: ((a[0] + (-1) ** a[1] * b[0] + 2 * a[1] * b[1]) % 4, (a[1] + b[1]) % 2),
        labels=[f"{p}{q}" for p, q in elements],
        name="Q8",
    )


def _matmul(A: ScalarMatrix, B: ScalarMatrix) -> ScalarMatrix:
    n, m, k = len(A), len(B), len(B[0])
    return [[sum((A[i][t] * B[t][j] for t in range(m)), CycloNumber.zero(A[0][0].order)) for j in range(k)]
            for i in range(n)]


def two_dim_representation(group: FiniteGroup, order: int = 4) -> Dict[Element, ScalarMatrix]:
    """
    The faithful 2-dimensional representation of D8 or Q8 over Q(i).

    rho(x^p y^q) = rho(x)^p rho(y)^q with
    D8: rho(x) = diag(-i, i), rho(y) = [[0, i], [-i, 0]];
    Q8: rho(x) = [[0, i], [i, 0]], rho(y) = diag(i, -i).
    """
    i = CycloNumber.zeta(order, order // 4)
    zero, one = CycloNumber.zero(order), CycloNumber.one(order)
    if group.name == "D8":
        x = [[-i, zero], [zero, i]]
        y = [[zero, i], [-i, zero]]
    elif group.name == "Q8":
        x = [[zero, i], [i, zero]]
        y = [[i, zero], [zero, -i]]
    else:
        raise BadParams(f"no 2-dimensional representation recorded for {group.name!r}")
    identity = [[one, zero], [zero, one]]
    rho = {}
    for p, q in group.elements:
        mat = identity
        for _ in range(p):
            mat = _matmul(mat, x)
        for _ in range(q):
            mat = _matmul(mat, y)
        rho[(p, q)] = mat
    for a in group.elements:
        for b in group.elements:
            if _matmul(rho[a], rho[b]) != rho[group.product(a, b)]:
                raise BadParams(f"rho is not multiplicative on {a} {b}")
    return rho


def group_algebra(group: FiniteGroup, order: int = 1, generators: Optional[Sequence[Element]] = None) -> HopfData:
    """kG with group-like basis, S(g) = g^-1."""
    one = CycloNumber.one(order)
    n = len(group)
    mult = {(i, j): {group.index(group.product(a, b)): one}
            for i, a in enumerate(group.elements) for j, b in enumerate(group.elements)}
    h = HopfData(
        dim=n,
        order=order,
        labels=list(group.labels),
        mult=mult,
        unit={group.index(group.identity): one},
        comult={i: {(i, i): one} for i in range(n)},
        counit={i: one for i in range(n)},
        antipode={i: {group.index(group.inverse(g)): one} for i, g in enumerate(group.elements)},
        level="hopf",
        generators=[group.index(g) for g in generators] if generators is not None else None,
        name=f"k{group.name}",
    )
    logger.info(f"Built group algebra {h.name} of dimension {n}")
    return h


def dual_group_algebra(group: FiniteGroup, order: int = 1) -> HopfData:
    """(kG)* on the dual basis e_g: orthogonal idempotents, Delta(e_g) = sum_{ab=g} e_a (x) e_b."""
    one = CycloNumber.one(order)
    n = len(group)
    comult: Dict[int, Dict[Tuple[int, int], CycloNumber]] = {i: {} for i in range(n)}
    for a in group.elements:
        for b in group.elements:
            comult[group.index(group.product(a, b))][(group.index(a), group.index(b))] = one
    h = HopfData(
        dim=n,
        order=order,
        labels=[f"e{label}" for label in group.labels],
        mult={(i, i): {i: one} for i in range(n)},
        unit={i: one for i in range(n)},
        comult=comult,
        counit={group.index(group.identity): one},
        antipode={i: {group.index(group.inverse(g)): one} for i, g in enumerate(group.elements)},
        level="hopf",
        name=f"(k{group.name})*",
    )
    logger.info(f"Built dual group algebra {h.name} of dimension {n}")
    return h


# H8 basis x^a y^b z^c sits at index a + 2b + 4c.

def h8_index(a: int, b: int, c: int) -> int:
    return (a % 2) + 2 * (b % 2) + 4 * c


def _h8_label(a: int, b: int, c: int) -> str:
    return ("x" * a + "y" * b + "z" * c) or "1"


def _h8_product(order: int) -> Dict[Tuple[int, int], Dict[int, CycloNumber]]:
    one = CycloNumber.one(order)
    half = CycloNumber.rational(Fraction(1, 2), order)
    mult = {}
    for (c, b, a), (c2, b2, a2) in itertools.product(itertools.product(range(2), repeat=3), repeat=2):
        if c == 0:
            vec = {h8_index(a + a2, b + b2, c2): one}
        else:
            # z x^a2 y^b2 = x^b2 y^a2 z
            aa, bb = a + b2, b + a2
            if c2 == 0:
                vec = {h8_index(aa, bb, 1): one}
            else:
                # z^2 = (1 + x + y - xy) / 2
                vec = {}
                for da, db, s in ((0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, -1)):
                    add_into(vec, {h8_index(aa + da, bb + db, 0): half * s})
        mult[(h8_index(a, b, c), h8_index(a2, b2, c2))] = vec
    return mult


def h8_algebra(order: int = 4) -> HopfData:
    """
    The Kac-Paljutkin algebra H8.

    Generated by x, y, z with x^2 = y^2 = 1, xy = yx, zx = yz, zy = xz,
    z^2 = (1 + x + y - xy)/2; x and y are group-like and
    Delta(z) = (1 (x) 1 + 1 (x) x + y (x) 1 - y (x) x)(z (x) z)/2,
    eps(z) = 1, S(z) = z.
    """
    one = CycloNumber.one(order)
    half = CycloNumber.rational(Fraction(1, 2), order)
    mult = _h8_product(order)
    carrier = HopfData(dim=8, order=order, labels=[_h8_label(a, b, c) for c in range(2) for b in range(2) for a in range(2)],
                       mult=mult, unit={0: one}, level="algebra")

    x, y, z = h8_index(1, 0, 0), h8_index(0, 1, 0), h8_index(0, 0, 1)
    delta_gen = {
        x: {(x, x): one},
        y: {(y, y): one},
        z: {(z, z): half, (z, h8_index(1, 0, 1)): half, (h8_index(0, 1, 1), z): half,
            (h8_index(0, 1, 1), h8_index(1, 0, 1)): -half},
    }
    comult = {}
    antipode = {}
    for c in range(2):
        for b in range(2):
            for a in range(2):
                word = [x] * a + [y] * b + [z] * c
                tensor = {(0, 0): one}
                image = carrier.unit_vector()
                for letter in word:
                    tensor = carrier.tensor_product(tensor, delta_gen[letter])
                    # S is an anti-homomorphism and fixes every generator
                    image = carrier.product(carrier.basis_vector(letter), image)
                comult[h8_index(a, b, c)] = tensor
                antipode[h8_index(a, b, c)] = image
    h = carrier.with_tables(
        comult=comult,
        counit={i: one for i in range(8)},
        antipode=antipode,
        level="hopf",
        generators=[x, y, z],
        name="H8",
    )
    logger.info("Built H8")
    return h
