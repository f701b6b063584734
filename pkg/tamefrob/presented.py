"""
The tame local graded Frobenius quotients of k<x, y> and their normal forms.

Each family is a finite rewriting system on words in x and y. Rules replace
an occurrence of the left side by a scalar multiple of a single word (or by
zero). Normal words are the words containing no left side; they form the
basis of the quotient.
"""
import logging
import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from errors import BadParams, NonTerminating
from exactfield import CycloNumber, add_into, nullspace, rank
from tensorcore import HopfData
from coradical import jacobson_radical

logger = logging.getLogger(__name__)

FAMILIES = ("F1", "F2", "F3", "F4")

Combination = Dict[str, CycloNumber]
Rule = Tuple[str, Optional[str], Optional[CycloNumber]]


@dataclass
class FrobeniusData:
    dim: int
    top_word: str
    socle_dim: int
    gram_rank: int
    radical_dim: int

    @property
    def is_frobenius(self) -> bool:
        return self.socle_dim == 1 and self.gram_rank == self.dim

    @property
    def is_local(self) -> bool:
        return self.radical_dim == self.dim - 1

    def to_dict(self) -> Dict:
        return {
            "dim": self.dim,
            "top_word": self.top_word,
            "socle_dim": self.socle_dim,
            "gram_rank": self.gram_rank,
            "radical_dim": self.radical_dim,
            "frobenius": self.is_frobenius,
            "local": self.is_local,
        }


@dataclass
class PresentedAlgebra:
    """A quotient k<x, y>/I given by family and parameters."""
    family: str
    a: Optional[CycloNumber] = None
    m: Optional[int] = None
    n: Optional[int] = None
    rules: List[Rule] = field(default_factory=list)
    nf_basis: List[str] = field(default_factory=list)
    order: int = 1
    frobenius: Optional[FrobeniusData] = None

    @property
    def dim(self) -> int:
        return len(self.nf_basis)

    @property
    def params(self) -> Dict:
        out = {}
        if self.a is not None:
            out["a"] = self.a.to_json()
        if self.m is not None:
            out["m"] = self.m
        if self.n is not None:
            out["n"] = self.n
        return out

    def relations(self) -> List[str]:
        out = []
        for lhs, rhs, c in self.rules:
            if rhs is None:
                out.append(f"{lhs} -> 0")
            elif c.is_one():
                out.append(f"{lhs} -> {rhs}")
            else:
                out.append(f"{lhs} -> ({c})*{rhs}")
        return out

    def to_json(self) -> Dict:
        data = {
            "family": self.family,
            "params": self.params,
            "dim": self.dim,
            "basis": [w or "1" for w in self.nf_basis],
            "rules": self.relations(),
        }
        if self.frobenius is not None:
            data["frobenius"] = self.frobenius.to_dict()
        return data


def family_rules(family: str, a: Optional[CycloNumber] = None, m: Optional[int] = None,
                 n: Optional[int] = None) -> Tuple[List[Rule], int]:
    """Rewriting rules of a family, oriented so that every step terminates.

    Raises:
        BadParams: when a parameter is missing or outside its range
    """
    if family not in FAMILIES:
        raise BadParams(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    if family in ("F1", "F2"):
        if a is None or a.is_zero():
            raise BadParams(f"{family} needs a nonzero parameter a")
    order = a.order if a is not None else 1
    one = CycloNumber.one(order)

    if family == "F1":
        return [("yy", "xx", one), ("yx", "xx", a), ("xy", None, None), ("xxx", None, None)], order
    if family == "F2":
        if m is None or m < 1:
            raise BadParams("F2 needs m >= 1")
        return [("xx", None, None), ("yy", None, None), ("xy" * m, "yx" * m, a)], order
    if family == "F3":
        if n is None or n < 2:
            raise BadParams("F3 needs n >= 2")
        return [("xy", None, None), ("yx", None, None), ("y" * n, "x" * n, one), ("x" * (n + 1), None, None)], order
    if m is None or m < 1:
        raise BadParams("F4 needs m >= 1")
    return [("xx", None, None), ("yy", None, None), ("yx" * m + "y", "xy" * m + "x", one)], order


def _find_redex(word: str, rules: List[Rule], rightmost: bool) -> Optional[Tuple[int, Rule]]:
    positions = range(len(word) - 1, -1, -1) if rightmost else range(len(word))
    for pos in positions:
        for rule in rules:
            if word.startswith(rule[0], pos):
                return pos, rule
    return None


def reduce_word(word: str, rules: List[Rule], order: int = 1, rightmost: bool = False,
                max_steps: int = 100000) -> Combination:
    """Normal form of a single word as a combination of normal words."""
    pending: Combination = {word: CycloNumber.one(order)}
    result: Combination = {}
    steps = 0
    while pending:
        w, c = pending.popitem()
        found = _find_redex(w, rules, rightmost)
        if found is None:
            add_into(result, {w: c})
            continue
        steps += 1
        if steps > max_steps:
            raise NonTerminating(f"rewriting of {word!r} did not terminate within {max_steps} steps")
        pos, (lhs, rhs, scale) = found
        if rhs is None:
            continue
        add_into(pending, {w[:pos] + rhs + w[pos + len(lhs):]: c * scale})
    return result


def normal_form(p: PresentedAlgebra, word: str, rightmost: bool = False) -> Combination:
    """Reduce a word over {x, y} to a combination of normal words."""
    if any(ch not in "xy" for ch in word):
        raise BadParams(f"word {word!r} is not over the letters x and y")
    return reduce_word(word, p.rules, p.order, rightmost)


def normal_words(rules: List[Rule], limit: int = 64, letters: str = "xy") -> List[str]:
    """All words without a left side, in degree-lexicographic order of the letters."""
    lhs = [r[0] for r in rules]
    words = [""]
    layer = [""]
    for _ in range(limit):
        nxt = []
        for w in layer:
            for letter in letters:
                candidate = w + letter
                if not any(candidate.endswith(l) for l in lhs):
                    nxt.append(candidate)
        if not nxt:
            return words
        words.extend(sorted(nxt))
        layer = nxt
    raise NonTerminating(f"more than {limit} layers of normal words; the quotient is not finite-dimensional")


def _word_label(word: str) -> str:
    return word or "1"


def frobenius_data(h: HopfData, basis: List[str]) -> FrobeniusData:
    """Socle, top-word pairing rank and radical of a local graded quotient."""
    top = len(basis) - 1
    radical_basis = [i for i, w in enumerate(basis) if w]
    rows: Dict[Tuple[int, int], Dict[int, CycloNumber]] = {}
    for j in radical_basis:
        for k in range(h.dim):
            for i, c in h.basis_product(j, k).items():
                add_into(rows.setdefault((j, i), {}), {k: c})
    socle = nullspace([r for r in rows.values() if r], h.order, list(range(h.dim)))
    gram = []
    for u in range(h.dim):
        row = {}
        for v in range(h.dim):
            c = h.basis_product(u, v).get(top)
            if c:
                row[v] = c
        gram.append(row)
    return FrobeniusData(
        dim=h.dim,
        top_word=basis[top],
        socle_dim=len(socle),
        gram_rank=rank(gram, h.order),
        radical_dim=jacobson_radical(h).dim,
    )


def algebra_from_rules(rules: List[Rule], order: int = 1, letters: str = "xy",
                       name: str = "") -> Tuple[HopfData, List[str]]:
    """Structure constants of the quotient of the free algebra on letters by a rewriting system."""
    basis = normal_words(rules, letters=letters)
    index = {w: i for i, w in enumerate(basis)}
    mult = {}
    for i, u in enumerate(basis):
        for j, v in enumerate(basis):
            combo = reduce_word(u + v, rules, order)
            if combo:
                mult[(i, j)] = {index[w]: c for w, c in combo.items()}
    h = HopfData(
        dim=len(basis),
        order=order,
        labels=[_word_label(w) for w in basis],
        mult=mult,
        unit={0: CycloNumber.one(order)},
        level="algebra",
        generators=[index[w] for w in letters if w in index],
        name=name,
    )
    return h, basis


def build_tame_quotient(family: str, a: Optional[CycloNumber] = None, m: Optional[int] = None,
                        n: Optional[int] = None) -> Tuple[HopfData, PresentedAlgebra]:
    """
    Algebra-level structure constants of k<x, y>/I for one of the four families.

    Args:
        family: "F1", "F2", "F3" or "F4"
        a: nonzero scalar for F1 and F2
        m: positive integer for F2 and F4
        n: integer >= 2 for F3

    Returns:
        (HopfData on the normal words, PresentedAlgebra)

    Raises:
        BadParams: parameter constraints fail
    """
    rules, order = family_rules(family, a, m, n)
    name = f"{family}({', '.join(f'{k}={v}' for k, v in (('a', a), ('m', m), ('n', n)) if v is not None)})"
    h, basis = algebra_from_rules(rules, order, name=name)
    presented = PresentedAlgebra(family=family, a=a if family in ("F1", "F2") else None,
                                 m=m if family in ("F2", "F4") else None,
                                 n=n if family == "F3" else None,
                                 rules=rules, nf_basis=basis, order=order)
    presented.frobenius = frobenius_data(h, basis)
    if not presented.frobenius.is_frobenius or not presented.frobenius.is_local:
        logger.error(f"{name} fails the local Frobenius checks: {presented.frobenius.to_dict()}")
    logger.info(f"Built {name} of dimension {h.dim}")
    return h, presented


def random_word(rng: random.Random, max_length: int) -> str:
    return "".join(rng.choice("xy") for _ in range(rng.randint(0, max_length)))


def confluence_check(p: PresentedAlgebra, samples: int = 1000, max_length: int = 12,
                     seed: int = 0) -> bool:
    """Leftmost and rightmost reduction agree on random words."""
    rng = random.Random(seed)
    for _ in range(samples):
        word = random_word(rng, max_length)
        left = normal_form(p, word)
        right = normal_form(p, word, rightmost=True)
        if left != right:
            logger.error(f"{p.family}: {word!r} reduces to {left} and to {right}")
            return False
    return True
