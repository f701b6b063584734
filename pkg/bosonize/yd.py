"""
Yetter-Drinfeld data: a braided Hopf algebra R in the category of left-left
Yetter-Drinfeld modules over a Hopf algebra H'.
"""
import logging
from dataclasses import dataclass, field
from math import lcm
from typing import Dict, List, Optional, Sequence, Tuple

from errors import YDViolation
from exactfield import CycloNumber, add_into, sub_vectors
from tensorcore import (
    CheckResult,
    HopfData,
    VerificationReport,
    collect_witnesses,
    verify_axioms,
)

logger = logging.getLogger(__name__)

Vector = Dict[int, CycloNumber]
Tensor = Dict[Tuple[int, int], CycloNumber]
LetterAction = Dict[Tuple[int, str], Dict[str, CycloNumber]]
LetterCoaction = Dict[str, Dict[Tuple[int, str], CycloNumber]]


@dataclass
class YDData:
    """
    R with its action H' (x) R -> R and coaction R -> H' (x) R.

    action[(h, r)] is the vector h . r in R and coaction[r] the tensor
    delta(r) keyed by (index in H', index in R). R carries multiplication and
    comultiplication side by side with level "coalgebra"; it is not an
    ordinary bialgebra.
    """
    R: HopfData
    hp: HopfData
    action: Dict[Tuple[int, int], Vector]
    coaction: Dict[int, Tensor]
    braided_antipode: Optional[Dict[int, Vector]] = None
    words: List[str] = field(default_factory=list)
    name: str = ""

    def act(self, h: Vector, r: Vector) -> Vector:
        out: Vector = {}
        for i, a in h.items():
            for j, b in r.items():
                vec = self.action.get((i, j))
                if vec:
                    add_into(out, vec, a * b)
        return out

    def coact(self, r: Vector) -> Tensor:
        out: Tensor = {}
        for j, b in r.items():
            tensor = self.coaction.get(j)
            if tensor:
                add_into(out, tensor, b)
        return out

    def to_json(self) -> Dict:
        return {
            "name": self.name,
            "R": self.R.to_json(),
            "hp": self.hp.to_json(),
            "action": [[h, r, k, c.to_json()] for (h, r) in sorted(self.action)
                       for k, c in sorted(self.action[(h, r)].items())],
            "coaction": [[r, h, k, c.to_json()] for r in sorted(self.coaction)
                         for (h, k), c in sorted(self.coaction[r].items())],
        }

    @classmethod
    def from_tables(cls, R: HopfData, hp: HopfData, action_rows: Sequence, coaction_rows: Sequence,
                    name: str = "") -> "YDData":
        """Decode the "action" rows [h, r, k, c] and "coaction" rows [r, h, k, c] of to_json."""
        order = lcm(R.order, hp.order)
        action: Dict[Tuple[int, int], Vector] = {}
        for h, r, k, c in action_rows:
            add_into(action.setdefault((int(h), int(r)), {}), {int(k): CycloNumber.from_json(c, order)})
        coaction: Dict[int, Tensor] = {}
        for r, h, k, c in coaction_rows:
            add_into(coaction.setdefault(int(r), {}), {(int(h), int(k)): CycloNumber.from_json(c, order)})
        return cls(R=R, hp=hp, action=action, coaction=coaction, name=name)


def _letter_vector(letters: Dict[str, CycloNumber], index: Dict[str, int]) -> Vector:
    return {index[w]: c for w, c in letters.items() if c}


def build_yd(algebra: HopfData, words: List[str], hp: HopfData, letter_action: LetterAction,
             letter_coaction: LetterCoaction, letter_names: Optional[Dict[str, str]] = None,
             name: str = "") -> YDData:
    """
    Extend action, coaction and the braided coproduct from the letters to all
    normal words.

    Letters are braided primitive. On a normal word lw' (l a letter):
      h . (lw')   = sum (h_(1) . l)(h_(2) . w'),        h . 1 = eps(h) 1
      delta(lw')  = sum l_(-1) w'_(-1) (x) l_(0) w'_(0), delta(1) = 1 (x) 1
      Delta(lw')  = sum l w'_(1) (x) w'_(2) + (l_(-1) . w'_(1)) (x) l_(0) w'_(2)

    Args:
        algebra: the algebra R on the normal words (index 0 is the empty word)
        words: the normal words in index order
        hp: the Hopf algebra H'
        letter_action: (index of h, letter) -> {letter: scalar}, for every basis element h of H'
        letter_coaction: letter -> {(index of h, letter): scalar}
        letter_names: display names of the letters in labels
        name: display name

    Returns:
        YDData with R at level "coalgebra" and populated comultiplication
    """
    order = lcm(algebra.order, hp.order)
    index = {w: i for i, w in enumerate(words)}
    if words[0] != "":
        raise YDViolation("the first normal word must be the empty word")
    letters = sorted({w for w in words if len(w) == 1})
    one = CycloNumber.one(order)

    action: Dict[Tuple[int, int], Vector] = {}
    coaction: Dict[int, Tensor] = {}
    comult: Dict[int, Tensor] = {}
    by_length = sorted(range(len(words)), key=lambda i: (len(words[i]), i))

    def product(u: Vector, v: Vector) -> Vector:
        return algebra.product(u, v)

    for w_idx in by_length:
        w = words[w_idx]
        if not w:
            for h in range(hp.dim):
                eps = hp.counit_of(hp.basis_vector(h))
                if eps:
                    action[(h, 0)] = {0: eps}
            coaction[0] = {(k, 0): c for k, c in hp.unit_vector().items()}
            comult[0] = {(0, 0): one}
            continue
        head, tail = w[0], index[w[1:]]
        head_vec = {index[head]: one}
        for h in range(hp.dim):
            out: Vector = {}
            for (h1, h2), c in hp.basis_coproduct(h).items():
                moved = _letter_vector(letter_action.get((h1, head), {}), index)
                if moved:
                    add_into(out, product(moved, action.get((h2, tail), {})), c)
            if out:
                action[(h, w_idx)] = out
        delta: Tensor = {}
        for (g, l), c in letter_coaction.get(head, {}).items():
            for (g2, t), d in coaction[tail].items():
                for k, e in hp.basis_product(g, g2).items():
                    for r, f in product({index[l]: one}, {t: one}).items():
                        add_into(delta, {(k, r): c * d * e * f})
        coaction[w_idx] = delta
        tensor: Tensor = {}
        for (a, b), c in comult[tail].items():
            for r, f in product(head_vec, {a: one}).items():
                add_into(tensor, {(r, b): c * f})
            for (g, l), d in letter_coaction.get(head, {}).items():
                moved = action.get((g, a), {})
                if not moved:
                    continue
                right = product({index[l]: one}, {b: one})
                for r1, e in moved.items():
                    for r2, f in right.items():
                        add_into(tensor, {(r1, r2): c * d * e * f})
        comult[w_idx] = tensor

    names = letter_names or {}
    labels = ["".join(names.get(ch, ch) for ch in w) or "1" for w in words]
    R = algebra.with_tables(
        order=order,
        labels=labels,
        comult=comult,
        counit={0: one},
        level="coalgebra",
        generators=[index[l] for l in letters],
        name=name or algebra.name,
    )
    d = YDData(R=R, hp=hp, action=action, coaction=coaction, words=list(words), name=name or algebra.name)
    logger.info(f"Built Yetter-Drinfeld data {d.name}: dim R = {R.dim}, dim H' = {hp.dim}")
    return d


def braided_antipode(d: YDData) -> Dict[int, Vector]:
    """
    S_R by recursion over the index order: S_R(w) = eps(w) 1 - sum S_R(a) b
    over the terms a (x) b of Delta_R(w) other than w (x) 1.

    Raises:
        YDViolation: some term a (x) b has a >= w, so the recursion does not close
    """
    R = d.R
    S: Dict[int, Vector] = {}
    for w in range(R.dim):
        eps = R.counit_of(R.basis_vector(w))
        value: Vector = {0: eps} if eps else {}
        top = None
        for (a, b), c in sorted(R.basis_coproduct(w).items()):
            if (a, b) == (w, 0):
                top = c
                continue
            if a >= w:
                raise YDViolation(f"Delta_R({R.labels[w]}) has term {R.labels[a]} (x) {R.labels[b]} out of order")
            add_into(value, R.product(S[a], R.basis_vector(b)), -c)
        if top is None or not top.is_one():
            raise YDViolation(f"Delta_R({R.labels[w]}) lacks the term {R.labels[w]} (x) 1")
        S[w] = value
    d.braided_antipode = S
    return S


# ----------------------------------------------------------------------
# verification


def _tensor3(items) -> Dict[Tuple[int, int, int], CycloNumber]:
    out: Dict[Tuple[int, int, int], CycloNumber] = {}
    for key, c in items:
        add_into(out, {key: c})
    return out


def _check_module(d: YDData, exhaustive: bool, threads: int) -> List[CheckResult]:
    R, hp = d.R, d.hp

    def unit_probe(r: int) -> List[List[int]]:
        return [] if not sub_vectors(d.act(hp.unit_vector(), R.basis_vector(r)), R.basis_vector(r)) else [[r]]

    def assoc_probe(h: int) -> List[List[int]]:
        found = []
        for k in range(hp.dim):
            hk = hp.basis_product(h, k)
            for r in range(R.dim):
                lhs = d.act(hk, R.basis_vector(r))
                rhs = d.act(hp.basis_vector(h), d.act(hp.basis_vector(k), R.basis_vector(r)))
                if sub_vectors(lhs, rhs):
                    found.append([h, k, r])
                    if not exhaustive:
                        return found
        return found

    return [
        collect_witnesses("module_unit", unit_probe, range(R.dim), exhaustive, threads),
        collect_witnesses("module_associative", assoc_probe, range(hp.dim), exhaustive, threads),
    ]


def _check_comodule(d: YDData, exhaustive: bool, threads: int) -> List[CheckResult]:
    R, hp = d.R, d.hp

    def counit_probe(r: int) -> List[List[int]]:
        out: Vector = {}
        for (h, k), c in d.coaction.get(r, {}).items():
            e = hp.counit_of(hp.basis_vector(h))
            if e:
                add_into(out, {k: c * e})
        return [[r]] if sub_vectors(out, R.basis_vector(r)) else []

    def coassoc_probe(r: int) -> List[List[int]]:
        delta = d.coaction.get(r, {})
        lhs = _tensor3(((a, b, k), c * e) for (h, k), c in delta.items()
                       for (a, b), e in hp.basis_coproduct(h).items())
        rhs = _tensor3(((h, a, k2), c * e) for (h, k), c in delta.items()
                       for (a, k2), e in d.coaction.get(k, {}).items())
        return [[r]] if sub_vectors(lhs, rhs) else []

    return [
        collect_witnesses("comodule_counit", counit_probe, range(R.dim), exhaustive, threads),
        collect_witnesses("comodule_coassociative", coassoc_probe, range(R.dim), exhaustive, threads),
    ]


def _check_module_algebra(d: YDData, exhaustive: bool, threads: int) -> CheckResult:
    R, hp = d.R, d.hp

    def probe(h: int) -> List[List[int]]:
        found = []
        eps = hp.counit_of(hp.basis_vector(h))
        if sub_vectors(d.act(hp.basis_vector(h), R.unit_vector()), {k: v * eps for k, v in R.unit_vector().items()}):
            found.append([h, -1, -1])
        for r in range(R.dim):
            for s in range(R.dim):
                lhs = d.act(hp.basis_vector(h), R.basis_product(r, s))
                rhs: Vector = {}
                for (h1, h2), c in hp.basis_coproduct(h).items():
                    add_into(rhs, R.product(d.act(hp.basis_vector(h1), R.basis_vector(r)),
                                            d.act(hp.basis_vector(h2), R.basis_vector(s))), c)
                if sub_vectors(lhs, rhs):
                    found.append([h, r, s])
                if found and not exhaustive:
                    return found
        return found

    return collect_witnesses("module_algebra", probe, range(hp.dim), exhaustive, threads)


def _coact_product(d: YDData, x: Tensor, y: Tensor) -> Tensor:
    """Componentwise product in H' (x) R."""
    out: Tensor = {}
    for (g, r), c in x.items():
        for (g2, s), e in y.items():
            left = d.hp.basis_product(g, g2)
            right = d.R.basis_product(r, s)
            for k, u in left.items():
                for l, v in right.items():
                    add_into(out, {(k, l): c * e * u * v})
    return out


def _check_comodule_algebra(d: YDData, exhaustive: bool, threads: int) -> CheckResult:
    R = d.R

    def probe(r: int) -> List[List[int]]:
        found = []
        if r == 0:
            expected = {(k, l): a * b for k, a in d.hp.unit_vector().items() for l, b in R.unit_vector().items()}
            if sub_vectors(d.coact(R.unit_vector()), expected):
                found.append([-1, -1])
        for s in range(R.dim):
            lhs = d.coact(R.basis_product(r, s))
            rhs = _coact_product(d, d.coaction.get(r, {}), d.coaction.get(s, {}))
            if sub_vectors(lhs, rhs):
                found.append([r, s])
                if not exhaustive:
                    return found
        return found

    return collect_witnesses("comodule_algebra", probe, range(R.dim), exhaustive, threads)


def _check_module_coalgebra(d: YDData, exhaustive: bool, threads: int) -> CheckResult:
    R, hp = d.R, d.hp

    def probe(h: int) -> List[List[int]]:
        found = []
        eps = hp.counit_of(hp.basis_vector(h))
        for r in range(R.dim):
            moved = d.act(hp.basis_vector(h), R.basis_vector(r))
            lhs = R.coproduct(moved)
            rhs: Tensor = {}
            for (h1, h2), c in hp.basis_coproduct(h).items():
                for (a, b), e in R.basis_coproduct(r).items():
                    left = d.act(hp.basis_vector(h1), R.basis_vector(a))
                    right = d.act(hp.basis_vector(h2), R.basis_vector(b))
                    for k, u in left.items():
                        for l, v in right.items():
                            add_into(rhs, {(k, l): c * e * u * v})
            counit_ok = R.counit_of(moved) == eps * R.counit_of(R.basis_vector(r))
            if sub_vectors(lhs, rhs) or not counit_ok:
                found.append([h, r])
                if not exhaustive:
                    return found
        return found

    return collect_witnesses("module_coalgebra", probe, range(hp.dim), exhaustive, threads)


def _check_comodule_coalgebra(d: YDData, exhaustive: bool, threads: int) -> CheckResult:
    R, hp = d.R, d.hp

    def probe(r: int) -> List[List[int]]:
        # r_(-1) (x) Delta(r_(0)) = r_(1)(-1) r_(2)(-1) (x) r_(1)(0) (x) r_(2)(0)
        lhs = _tensor3(((h, a, b), c * e) for (h, k), c in d.coaction.get(r, {}).items()
                       for (a, b), e in R.basis_coproduct(k).items())
        rhs: Dict[Tuple[int, int, int], CycloNumber] = {}
        for (a, b), c in R.basis_coproduct(r).items():
            for (g, a0), e in d.coaction.get(a, {}).items():
                for (g2, b0), f in d.coaction.get(b, {}).items():
                    for k, u in hp.basis_product(g, g2).items():
                        add_into(rhs, {(k, a0, b0): c * e * f * u})
        counit: Vector = {}
        for (h, k), c in d.coaction.get(r, {}).items():
            e = R.counit_of(R.basis_vector(k))
            if e:
                add_into(counit, {h: c * e})
        eps = R.counit_of(R.basis_vector(r))
        expected = {k: v * eps for k, v in hp.unit_vector().items()} if eps else {}
        return [[r]] if sub_vectors(lhs, rhs) or sub_vectors(counit, expected) else []

    return collect_witnesses("comodule_coalgebra", probe, range(R.dim), exhaustive, threads)


def _check_yd_compatibility(d: YDData, exhaustive: bool, threads: int) -> CheckResult:
    """delta(h . r) = h_(1) r_(-1) S(h_(3)) (x) h_(2) . r_(0)."""
    R, hp = d.R, d.hp

    def probe(h: int) -> List[List[int]]:
        found = []
        triple = _tensor3(((a, b1, b2), c * e) for (a, b), c in hp.basis_coproduct(h).items()
                          for (b1, b2), e in hp.basis_coproduct(b).items())
        for r in range(R.dim):
            lhs = d.coact(d.act(hp.basis_vector(h), R.basis_vector(r)))
            rhs: Tensor = {}
            for (h1, h2, h3), c in triple.items():
                s3 = hp.antipode_of(hp.basis_vector(h3))
                for (g, k), e in d.coaction.get(r, {}).items():
                    left = hp.product_many(hp.basis_vector(h1), hp.basis_vector(g), s3)
                    right = d.act(hp.basis_vector(h2), R.basis_vector(k))
                    for a, u in left.items():
                        for b, v in right.items():
                            add_into(rhs, {(a, b): c * e * u * v})
            if sub_vectors(lhs, rhs):
                found.append([h, r])
                if not exhaustive:
                    return found
        return found

    return collect_witnesses("yd_compatibility", probe, range(hp.dim), exhaustive, threads)


def _braided_product(d: YDData, x: Tensor, y: Tensor) -> Tensor:
    """(a (x) b)(c (x) e) = a (b_(-1) . c) (x) b_(0) e in the braided tensor square."""
    R = d.R
    out: Tensor = {}
    for (a, b), s in x.items():
        for (g, b0), t in d.coaction.get(b, {}).items():
            for (c, e), u in y.items():
                left = R.product(R.basis_vector(a), d.act(d.hp.basis_vector(g), R.basis_vector(c)))
                right = R.basis_product(b0, e)
                for k, v in left.items():
                    for l, w in right.items():
                        add_into(out, {(k, l): s * t * u * v * w})
    return out


def _check_braided_bialgebra(d: YDData, exhaustive: bool, threads: int) -> CheckResult:
    R = d.R

    def probe(r: int) -> List[List[int]]:
        found = []
        for s in range(R.dim):
            lhs = R.coproduct(R.basis_product(r, s))
            rhs = _braided_product(d, R.basis_coproduct(r), R.basis_coproduct(s))
            if sub_vectors(lhs, rhs):
                found.append([r, s])
                if not exhaustive:
                    return found
        return found

    return collect_witnesses("braided_bialgebra", probe, range(R.dim), exhaustive, threads)


def verify_yd(d: YDData, exhaustive: bool = False, threads: int = 1) -> VerificationReport:
    """
    Itemized Yetter-Drinfeld and braided bialgebra checks.

    Covers the algebra and coalgebra axioms of R, the module and comodule
    axioms, the four compatibilities of the action and coaction with the
    structure of R, Yetter-Drinfeld compatibility and multiplicativity of
    Delta_R into the braided tensor square.
    """
    report = VerificationReport(subject=f"{d.name or 'R'} in YD over {d.hp.name or 'H'}")
    report.metadata.update({"dim_R": d.R.dim, "dim_Hp": d.hp.dim})
    for check in verify_axioms(d.R, "algebra", exhaustive, threads).checks:
        report.add(CheckResult(name=f"R_{check.name}", passed=check.passed, witness=check.witness,
                               detail=check.detail))
    for check in verify_axioms(d.R, "coalgebra", exhaustive, threads).checks:
        report.add(CheckResult(name=f"R_{check.name}", passed=check.passed, witness=check.witness,
                               detail=check.detail))
    for check in _check_module(d, exhaustive, threads) + _check_comodule(d, exhaustive, threads):
        report.add(check)
    report.add(_check_module_algebra(d, exhaustive, threads))
    report.add(_check_comodule_algebra(d, exhaustive, threads))
    report.add(_check_module_coalgebra(d, exhaustive, threads))
    report.add(_check_comodule_coalgebra(d, exhaustive, threads))
    report.add(_check_yd_compatibility(d, exhaustive, threads))
    report.add(_check_braided_bialgebra(d, exhaustive, threads))
    logger.info(f"Yetter-Drinfeld verification of {d.name}: {'passed' if report.passed else 'failed'}")
    return report
