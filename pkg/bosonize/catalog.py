"""
Catalog of tame coradically graded Hopf algebras built as Radford biproducts.

Every entry is generated from generator data: the letters of R with their
action and coaction, the rewriting rules of R and the structure of H'.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Any, Callable, Dict, List, Optional, Tuple

from coradical import Subspace
from errors import BadParams
from exactfield import CycloNumber, add_into, primitive_root_order
from tamefrob import PresentedAlgebra, algebra_from_rules, build_tame_quotient
from tensorcore import HopfData, MatrixOverAlgebra
from .biproduct import bosonize, canonical_splitting, embed_hp, embed_r
from .groups import (
    abelian_group,
    cyclic_group,
    dihedral_group,
    dual_group_algebra,
    group_algebra,
    h8_algebra,
    h8_index,
    quaternion_group,
    two_dim_representation,
)
from .radford import RadfordSplitting
from .yd import LetterAction, LetterCoaction, YDData, build_yd

logger = logging.getLogger(__name__)

NAMES = ("case-ii", "case-iii", "d8star", "q8star", "h8", "taft")


@dataclass
class CatalogEntry:
    name: str
    params: Dict[str, Any]
    hopf: HopfData
    yd: YDData
    splitting: RadfordSplitting
    grading: List[Subspace]
    presented: Optional[PresentedAlgebra] = None
    C: Optional[MatrixOverAlgebra] = None
    X: Optional[MatrixOverAlgebra] = None
    identification: str = ""
    notes: List[str] = field(default_factory=list)

    @property
    def coradical_dim(self) -> int:
        return self.yd.hp.dim

    @property
    def r_graded_dims(self) -> List[int]:
        return [space.dim // self.coradical_dim for space in self.grading]

    @property
    def expected_filtration(self) -> List[int]:
        dims, total = [], 0
        for space in self.grading:
            total += space.dim
            dims.append(total)
        return dims

    def r_side(self) -> Subspace:
        """Span of r # 1 over the basis of R."""
        return Subspace.span([embed_r(self.yd, self.yd.R.basis_vector(r)) for r in range(self.yd.R.dim)],
                             self.hopf.dim, self.hopf.order)

    def summary(self) -> Dict[str, Any]:
        data = {
            "name": self.name,
            "params": self.params,
            "dim": self.hopf.dim,
            "conductor": self.hopf.order,
            "coradical_dim": self.coradical_dim,
            "r_graded_dims": self.r_graded_dims,
            "filtration": self.expected_filtration,
            "identification": self.identification,
            "notes": list(self.notes),
            "fingerprint": self.hopf.fingerprint(),
        }
        if self.presented is not None:
            data["R"] = self.presented.to_json()
        return data


def _scalar(value: Any, order: int = 1) -> CycloNumber:
    if isinstance(value, CycloNumber):
        return value
    if isinstance(value, str):
        return CycloNumber.parse(value, order)
    return CycloNumber.rational(value, order)


def _grading(d: YDData, H: HopfData) -> List[Subspace]:
    top = max(len(w) for w in d.words)
    dh = d.hp.dim
    return [
        Subspace.of_basis_vectors([r * dh + h for r, w in enumerate(d.words) if len(w) == n for h in range(dh)],
                                  H.dim, H.order)
        for n in range(top + 1)
    ]


def _assemble(name: str, params: Dict[str, Any], d: YDData, presented: Optional[PresentedAlgebra],
              identification: str, notes: List[str], threads: int,
              matrices: Optional[Callable[[YDData, HopfData], Tuple[MatrixOverAlgebra, MatrixOverAlgebra]]] = None
              ) -> CatalogEntry:
    H = bosonize(d, threads=threads)
    H = H.with_tables(name=name)
    C = X = None
    if matrices is not None:
        C, X = matrices(d, H)
    entry = CatalogEntry(
        name=name,
        params=params,
        hopf=H,
        yd=d,
        splitting=canonical_splitting(d, H),
        grading=_grading(d, H),
        presented=presented,
        C=C,
        X=X,
        identification=identification,
        notes=notes,
    )
    logger.info(f"Catalog entry {name}: dim {H.dim}, R graded dims {entry.r_graded_dims}")
    return entry


# ----------------------------------------------------------------------
# Yetter-Drinfeld data for each entry


def case_ii_data(n: int = 2) -> Tuple[YDData, PresentedAlgebra]:
    """R = k<u, v>/(u^2, v^2, uv + vu) over kZ_n, g . u = -u, g . v = -v, delta(u) = g (x) u."""
    if n < 2 or n % 2:
        raise BadParams(f"case-ii needs an even n >= 2, got {n}")
    hp = group_algebra(cyclic_group(n), generators=[1])
    algebra, presented = build_tame_quotient("F2", a=CycloNumber.rational(-1), m=1)
    minus = CycloNumber.rational(-1)
    action: LetterAction = {}
    for a in range(n):
        action[(a, "x")] = {"x": minus ** a}
        action[(a, "y")] = {"y": minus ** a}
    one = CycloNumber.one()
    coaction: LetterCoaction = {"x": {(1, "x"): one}, "y": {(1, "y"): one}}
    d = build_yd(algebra, presented.nf_basis, hp, action, coaction, {"x": "u", "y": "v"}, name=f"R(case-ii, n={n})")
    return d, presented


def case_iii_scalar(alpha: CycloNumber, m: int) -> CycloNumber:
    """The scalar a in (uv)^m = a (vu)^m."""
    return CycloNumber.rational(-1, alpha.order) ** (m - 1) * alpha ** m


def case_iii_data(n1: int = 2, n2: int = 2, alpha: Any = -1, beta: Any = -1,
                  m: int = 1) -> Tuple[YDData, PresentedAlgebra, List[str]]:
    """
    R = k<u, v>/(u^2, v^2, (uv)^m - a (vu)^m) over k(Z_n1 x Z_n2).

    g . u = -u, g . v = alpha v, h . u = beta u, h . v = -v,
    delta(u) = g (x) u, delta(v) = h (x) v.

    Raises:
        BadParams: n1 or n2 odd, alpha^n1 != 1, beta^n2 != 1, alpha beta not a
            primitive m-th root of unity, or m not dividing lcm(n1, n2)
    """
    alpha, beta = _scalar(alpha), _scalar(beta)
    if m < 1:
        raise BadParams(f"case-iii needs m >= 1, got {m}")
    if n1 < 2 or n2 < 2 or n1 % 2 or n2 % 2:
        raise BadParams(f"case-iii needs even n1, n2 >= 2, got {n1}, {n2}")
    if alpha ** n1 != 1:
        raise BadParams(f"alpha = {alpha} is not an n1-th root of unity")
    if beta ** n2 != 1:
        raise BadParams(f"beta = {beta} is not an n2-th root of unity")
    if primitive_root_order(alpha * beta) != m:
        raise BadParams(f"alpha beta = {alpha * beta} is not a primitive {m}-th root of unity")
    if lcm(n1, n2) % m:
        raise BadParams(f"m = {m} does not divide lcm({n1}, {n2})")

    order = lcm(alpha.order, beta.order)
    a = case_iii_scalar(alpha, m)
    notes = []
    displayed = CycloNumber.rational(-1, order) ** (m - 1) * beta ** m
    if displayed != a:
        notes.append(
            f"relation scalar (-1)^(m-1) alpha^m = {a}; the form (-1)^(m-1) beta^m = {displayed} "
            f"agrees only when beta^(2m) = 1"
        )
        logger.warning(notes[-1])

    group = abelian_group(n1, n2)
    hp = group_algebra(group, order=order, generators=[(1, 0), (0, 1)])
    algebra, presented = build_tame_quotient("F2", a=a, m=m)
    minus = CycloNumber.rational(-1, order)
    action: LetterAction = {}
    for idx, (p, q) in enumerate(group.elements):
        action[(idx, "x")] = {"x": minus ** p * beta ** q}
        action[(idx, "y")] = {"y": alpha ** p * minus ** q}
    one = CycloNumber.one(order)
    coaction: LetterCoaction = {
        "x": {(group.index((1, 0)), "x"): one},
        "y": {(group.index((0, 1)), "y"): one},
    }
    d = build_yd(algebra, presented.nf_basis, hp, action, coaction, {"x": "u", "y": "v"},
                 name=f"R(case-iii, m={m})")
    return d, presented, notes


def _dual_group_data(kind: str) -> Tuple[YDData, PresentedAlgebra, Dict[Tuple[int, int], Dict[int, CycloNumber]]]:
    """
    R = k<u, v>/(u^2, v^2, uv + vu) over (kG)* for G = D8 or Q8.

    e_g . u = delta(g, x^2) u and delta(u) = c11 (x) u + c12 (x) v,
    delta(v) = c21 (x) u + c22 (x) v with c_ij = sum_g rho(g)_ij e_g.
    """
    order = 4
    group = dihedral_group() if kind == "d8star" else quaternion_group()
    hp = dual_group_algebra(group, order=order)
    rho = two_dim_representation(group, order)
    c: Dict[Tuple[int, int], Dict[int, CycloNumber]] = {}
    for i in range(2):
        for j in range(2):
            c[(i, j)] = {group.index(g): rho[g][i][j] for g in group.elements if rho[g][i][j]}

    algebra, presented = build_tame_quotient("F2", a=CycloNumber.rational(-1), m=1)
    one = CycloNumber.one(order)
    centre = group.index((2, 0))
    action: LetterAction = {(centre, "x"): {"x": one}, (centre, "y"): {"y": one}}
    letters = ("x", "y")
    coaction: LetterCoaction = {}
    for i, letter in enumerate(letters):
        coaction[letter] = {(g, letters[j]): v for j in range(2) for g, v in c[(i, j)].items()}
    d = build_yd(algebra, presented.nf_basis, hp, action, coaction, {"x": "u", "y": "v"},
                 name=f"R({kind})")
    return d, presented, c


def _h8_data() -> Tuple[YDData, PresentedAlgebra, HopfData]:
    """
    R = k<p1, p2>/(p1^2, p2^2, p1p2p1p2 + p2p1p2p1) over H8.

    x . p1 = y . p1 = p1, z . p1 = -p1, x . p2 = y . p2 = -p2, z . p2 = i p2;
    delta(p1) = (f00 - i f11) z (x) p1 + (f10 + i f01) z (x) p2,
    delta(p2) = (f00 + i f11) z (x) p2 + (f10 - i f01) z (x) p1,
    f_ij = (1 + (-1)^i x)(1 + (-1)^j y)/4.
    """
    order = 4
    hp = h8_algebra(order)
    i_unit = CycloNumber.zeta(order, 1)
    minus = CycloNumber.rational(-1, order)
    action: LetterAction = {}
    for c in range(2):
        for b in range(2):
            for a in range(2):
                idx = h8_index(a, b, c)
                action[(idx, "x")] = {"x": minus ** c}
                action[(idx, "y")] = {"y": minus ** (a + b) * i_unit ** c}

    quarter = CycloNumber.rational(Fraction(1, 4), order)
    x, y, z = (hp.basis_vector(h8_index(*e)) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    def f(i: int, j: int) -> Dict[int, CycloNumber]:
        left = add_into(dict(hp.unit_vector()), x, minus ** i)
        right = add_into(dict(hp.unit_vector()), y, minus ** j)
        return {k: v * quarter for k, v in hp.product(left, right).items()}

    def coefficient(sign: int, first: Tuple[int, int], second: Tuple[int, int]) -> Dict[int, CycloNumber]:
        vec = add_into(dict(f(*first)), f(*second), i_unit * sign)
        return hp.product(vec, z)

    coaction: LetterCoaction = {"x": {}, "y": {}}
    for letter, (s1, s2, other) in (("x", (-1, 1, "y")), ("y", (1, -1, "x"))):
        for k, v in coefficient(s1, (0, 0), (1, 1)).items():
            coaction[letter][(k, letter)] = v
        for k, v in coefficient(s2, (1, 0), (0, 1)).items():
            coaction[letter][(k, other)] = v

    algebra, presented = build_tame_quotient("F2", a=CycloNumber.rational(-1), m=2)
    d = build_yd(algebra, presented.nf_basis, hp, action, coaction, {"x": "p1", "y": "p2"}, name="R(h8)")
    return d, presented, hp


def taft_data(sign: int = -1) -> YDData:
    """R = k[x]/(x^2) over kZ2 with g . x = sign x and delta(x) = g (x) x."""
    if sign not in (1, -1):
        raise BadParams(f"taft sign must be 1 or -1, got {sign}")
    hp = group_algebra(cyclic_group(2), generators=[1])
    algebra, words = algebra_from_rules([("xx", None, None)], 1, letters="x", name="k[x]/(x^2)")
    s = CycloNumber.rational(sign)
    one = CycloNumber.one()
    action: LetterAction = {(0, "x"): {"x": one}, (1, "x"): {"x": s}}
    coaction: LetterCoaction = {"x": {(1, "x"): one}}
    return build_yd(algebra, words, hp, action, coaction, name=f"R(taft, sign={sign})")


def trivial_data(hp: HopfData) -> YDData:
    """R = k with trivial action and coaction."""
    algebra, words = algebra_from_rules([], hp.order, letters="", name="k")
    return build_yd(algebra, words, hp, {}, {}, name="k")


# ----------------------------------------------------------------------
# (C, X) matrices


def _letter_matrix(d: YDData, H: HopfData, column: List[Dict[str, Any]]) -> MatrixOverAlgebra:
    index = {w: i for i, w in enumerate(d.words)}
    entries = []
    for combo in column:
        vec: Dict[int, CycloNumber] = {}
        for letter, c in combo.items():
            add_into(vec, embed_r(d, d.R.basis_vector(index[letter])), _scalar(c, H.order))
        entries.append([vec])
    return MatrixOverAlgebra(H, entries)


def _dual_group_matrices(c: Dict[Tuple[int, int], Dict[int, CycloNumber]]):
    def build(d: YDData, H: HopfData) -> Tuple[MatrixOverAlgebra, MatrixOverAlgebra]:
        C = MatrixOverAlgebra(H, [[embed_hp(d, c[(i, j)]) for j in range(2)] for i in range(2)])
        X = _letter_matrix(d, H, [{"x": 1}, {"y": 1}])
        return C, X
    return build


def _h8_matrices(d: YDData, H: HopfData) -> Tuple[MatrixOverAlgebra, MatrixOverAlgebra]:
    half = CycloNumber.rational(Fraction(1, 2), H.order)
    i_unit = CycloNumber.zeta(H.order, H.order // 4)

    def entry(left: Tuple[int, int, int], right: Tuple[int, int, int], sign: int):
        vec = {h8_index(*left): half}
        add_into(vec, {h8_index(*right): half * sign})
        return embed_hp(d, vec)

    # C = [[z + yz, z - yz], [xz - xyz, xz + xyz]] / 2
    C = MatrixOverAlgebra(H, [
        [entry((0, 0, 1), (0, 1, 1), 1), entry((0, 0, 1), (0, 1, 1), -1)],
        [entry((1, 0, 1), (1, 1, 1), -1), entry((1, 0, 1), (1, 1, 1), 1)],
    ])
    X = _letter_matrix(d, H, [{"x": 1, "y": 1}, {"x": -i_unit, "y": i_unit}])
    return C, X


# ----------------------------------------------------------------------
# entry points


def yd_data(name: str, **params) -> YDData:
    """Yetter-Drinfeld data of a catalog entry without bosonizing it."""
    if name == "case-ii":
        return case_ii_data(int(params.get("n", 2)))[0]
    if name == "case-iii":
        return case_iii_data(**_case_iii_params(params))[0]
    if name in ("d8star", "q8star"):
        return _dual_group_data(name)[0]
    if name == "h8":
        return _h8_data()[0]
    if name == "taft":
        return taft_data(int(params.get("sign", -1)))
    raise BadParams(f"unknown example {name!r}; expected one of {', '.join(NAMES)}")


def _case_iii_params(params: Dict[str, Any]) -> Dict[str, Any]:
    return {
        "n1": int(params.get("n1", 2)),
        "n2": int(params.get("n2", 2)),
        "alpha": params.get("alpha", -1),
        "beta": params.get("beta", -1),
        "m": int(params.get("m", 1)),
    }


def example(name: str, threads: int = 1, cache=None, **params) -> CatalogEntry:
    """
    Build a catalog entry.

    Args:
        name: case-ii (n), case-iii (n1, n2, alpha, beta, m), d8star, q8star,
            h8 or taft (sign)
        threads: worker threads for the Yetter-Drinfeld checks
        cache: optional CacheManager holding built entries
        **params: entry parameters

    Returns:
        CatalogEntry with the biproduct, its splitting, grading and notes

    Raises:
        BadParams: unknown name or invalid parameters
        YDViolation: the data fail the Yetter-Drinfeld checks (taft with sign 1)
    """
    if name not in NAMES:
        raise BadParams(f"unknown example {name!r}; expected one of {', '.join(NAMES)}")
    if cache is not None:
        cached = cache.get_entry(name, params)
        if cached is not None:
            return cached

    if name == "case-ii":
        n = int(params.get("n", 2))
        d, presented = case_ii_data(n)
        entry = _assemble(f"case-ii(n={n})", {"n": n}, d, presented,
                          f"(k<x,y>/(x^2, y^2, xy+yx))* x kZ{n}", [], threads)
    elif name == "case-iii":
        p = _case_iii_params(params)
        d, presented, notes = case_iii_data(**p)
        a = case_iii_scalar(_scalar(p["alpha"]), p["m"])
        label = ", ".join(f"{k}={v}" for k, v in p.items())
        entry = _assemble(f"case-iii({label})", {k: str(v) for k, v in p.items()}, d, presented,
                          f"(k<x,y>/(x^2, y^2, (xy)^{p['m']} - ({a})(yx)^{p['m']}))* x k(Z{p['n1']} x Z{p['n2']})",
                          notes, threads)
    elif name in ("d8star", "q8star"):
        d, presented, c = _dual_group_data(name)
        group = "D8" if name == "d8star" else "Q8"
        note = (f"the relations u^2 = v^2 = 0, uv + vu = 0 give dim R = 4, so R = F2(m=1, a=-1) and dim H = 32; "
                f"the isomorphism display with (xy)^2 + (yx)^2 (m = 2) would need dim R = 8")
        logger.warning(f"{name}: {note}")
        entry = _assemble(name, {}, d, presented, f"(k<x,y>/(x^2, y^2, xy+yx))* x (k{group})*", [note], threads,
                          _dual_group_matrices(c))
    elif name == "h8":
        d, presented, _ = _h8_data()
        entry = _assemble("h8", {}, d, presented, "(k<x,y>/(x^2, y^2, (xy)^2+(yx)^2))* x H8", [], threads,
                          _h8_matrices)
    else:
        sign = int(params.get("sign", -1))
        d = taft_data(sign)
        entry = _assemble(f"taft(sign={sign})", {"sign": sign}, d, None, "k[x]/(x^2) x kZ2", [], threads)

    if cache is not None:
        cache.store_entry(name, params, entry)
    return entry
