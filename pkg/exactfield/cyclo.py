"""
Exact elements of cyclotomic fields Q(zeta_n).

A CycloNumber stores its value as an element of sympy's algebraic field
QQ<exp(2*pi*I/n)> (an ANP reduced modulo the n-th cyclotomic polynomial),
or as a plain QQ element when phi(n) = 1. Values are immutable.
"""
import logging
import re
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, Iterable, List, Optional, Tuple, Union

from sympy import I, Poly, Symbol, divisors, exp, pi, totient
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from config import config, get_field_settings
from errors import ConductorOverflow, DivisionByZero, InputFormatError

logger = logging.getLogger(__name__)

Scalar = Union["CycloNumber", int, Fraction]


def conductor_bound() -> int:
    """Largest conductor allowed when two fields are merged."""
    return int(get_field_settings(config).get("conductor_bound", 10000))


@lru_cache(maxsize=None)
def cyclotomic_domain(order: int):
    """Return the sympy domain for Q(zeta_order)."""
    if order < 1:
        raise ValueError(f"conductor must be positive, got {order}")
    if int(totient(order)) == 1:
        return QQ
    return QQ.algebraic_field(exp(2 * pi * I / order))


@lru_cache(maxsize=None)
def _zeta_powers(order: int) -> Tuple:
    """zeta^e for 0 <= e < order as elements of the domain."""
    K = cyclotomic_domain(order)
    if K is QQ:
        return (QQ(1),) if order == 1 else (QQ(1), QQ(-1))
    gen = K.new([QQ(1), QQ(0)])
    powers = [K.one]
    for _ in range(order - 1):
        powers.append(powers[-1] * gen)
    return tuple(powers)


def to_rational(value) -> "QQ.dtype":
    """Coerce a Python rational-like value to a QQ element."""
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if QQ.of_type(value):
        return value
    raise TypeError(f"cannot interpret {value!r} as a rational number")


def format_rational(q) -> str:
    """Render p/q in lowest terms, or just p when the denominator is 1."""
    num, den = int(q.numerator), int(q.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def parse_rational(text: str):
    text = text.strip()
    match = re.fullmatch(r"([+-]?\d+)(?:/(\d+))?", text)
    if not match:
        raise InputFormatError(f"not a rational number: {text!r}")
    num = int(match.group(1))
    den = int(match.group(2) or 1)
    if den == 0:
        raise InputFormatError(f"zero denominator in {text!r}")
    return QQ(num, den)


class CycloNumber:
    """An element sum_e c_e zeta_n^e of Q(zeta_n) in canonical power-basis form."""

    __slots__ = ("order", "_value", "_hash")

    def __init__(self, order: int, value):
        # value must already be an element of cyclotomic_domain(order)
        self.order = order
        self._value = value
        self._hash = None

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def rational(cls, value, order: int = 1) -> "CycloNumber":
        q = to_rational(value)
        K = cyclotomic_domain(order)
        return cls(order, q if K is QQ else K.convert_from(q, QQ))

    @classmethod
    def zero(cls, order: int = 1) -> "CycloNumber":
        return cls.rational(0, order)

    @classmethod
    def one(cls, order: int = 1) -> "CycloNumber":
        return cls.rational(1, order)

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> "CycloNumber":
        return cls(order, _zeta_powers(order)[power % order])

    @classmethod
    def coerce(cls, value: Scalar, order: int = 1) -> "CycloNumber":
        if isinstance(value, CycloNumber):
            return value
        return cls.rational(value, order)

    # ------------------------------------------------------------------
    # inspection

    @property
    def coeffs(self) -> Dict[int, "QQ.dtype"]:
        """Nonzero coefficients keyed by exponent of zeta_n."""
        K = cyclotomic_domain(self.order)
        if K is QQ:
            return {0: self._value} if self._value else {}
        listed = list(reversed(self._value.to_list()))
        return {e: c for e, c in enumerate(listed) if c}

    @property
    def value(self):
        """The underlying sympy domain element."""
        return self._value

    def terms(self) -> List[Tuple[int, "QQ.dtype"]]:
        return sorted(self.coeffs.items())

    def is_zero(self) -> bool:
        return not self._value

    def is_one(self) -> bool:
        return self.is_rational() and self.rational_value() == 1

    def is_rational(self) -> bool:
        return all(e == 0 for e in self.coeffs)

    def rational_value(self):
        """The QQ value of a rational element."""
        coeffs = self.coeffs
        if any(e != 0 for e in coeffs):
            raise ValueError(f"{self} is not rational")
        return coeffs.get(0, QQ(0))

    def is_integer(self) -> bool:
        return self.is_rational() and self.rational_value().denominator == 1

    # ------------------------------------------------------------------
    # field changes

    def embed(self, order: int) -> "CycloNumber":
        """Image of this element in Q(zeta_order); order must be a multiple."""
        if order == self.order:
            return self
        if self.is_rational():
            return CycloNumber.rational(self.rational_value(), order)
        if order % self.order:
            raise ValueError(f"cannot embed Q(zeta_{self.order}) into Q(zeta_{order})")
        step = order // self.order
        return canonicalize(order, [(e * step, c) for e, c in self.coeffs.items()])

    def _align(self, other: Scalar) -> Tuple["CycloNumber", "CycloNumber"]:
        if not isinstance(other, CycloNumber):
            return self, CycloNumber.rational(to_rational(other), self.order)
        if other.order == self.order:
            return self, other
        if other.is_rational():
            return self, CycloNumber.rational(other.rational_value(), self.order)
        if self.is_rational():
            return CycloNumber.rational(self.rational_value(), other.order), other
        common = self.order * other.order // gcd(self.order, other.order)
        if common > conductor_bound():
            raise ConductorOverflow(
                f"conductor lcm({self.order}, {other.order}) = {common} exceeds bound {conductor_bound()}"
            )
        return self.embed(common), other.embed(common)

    def conjugate(self) -> "CycloNumber":
        """Complex conjugate: zeta -> zeta^-1."""
        return canonicalize(self.order, [(-e, c) for e, c in self.coeffs.items()])

    # ------------------------------------------------------------------
    # arithmetic

    def __add__(self, other: Scalar) -> "CycloNumber":
        a, b = self._align(other)
        return CycloNumber(a.order, a._value + b._value)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> "CycloNumber":
        a, b = self._align(other)
        return CycloNumber(a.order, a._value - b._value)

    def __rsub__(self, other: Scalar) -> "CycloNumber":
        a, b = self._align(other)
        return CycloNumber(a.order, b._value - a._value)

    def __mul__(self, other: Scalar) -> "CycloNumber":
        a, b = self._align(other)
        return CycloNumber(a.order, a._value * b._value)

    __rmul__ = __mul__

    def __neg__(self) -> "CycloNumber":
        return CycloNumber(self.order, -self._value)

    def inverse(self) -> "CycloNumber":
        if self.is_zero():
            raise DivisionByZero(f"inverse of zero in Q(zeta_{self.order})")
        K = cyclotomic_domain(self.order)
        return CycloNumber(self.order, K.quo(K.one, self._value))

    def __truediv__(self, other: Scalar) -> "CycloNumber":
        a, b = self._align(other)
        return a * b.inverse()

    def __rtruediv__(self, other: Scalar) -> "CycloNumber":
        a, b = self._align(other)
        return b * a.inverse()

    def __pow__(self, exponent: int) -> "CycloNumber":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CycloNumber.one(self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, (CycloNumber, int, Fraction)) and not QQ.of_type(other):
            return NotImplemented
        try:
            a, b = self._align(other)
        except ConductorOverflow:
            return False
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        # equal values in different conductors must collide, so hash field invariants only
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(("rational", format_rational(self.rational_value())))
            else:
                key = tuple(format_rational(c) for c in self.minimal_polynomial())
                self._hash = hash(("algebraic", key))
        return self._hash

    def minimal_polynomial(self) -> List["QQ.dtype"]:
        """Monic minimal polynomial over Q, coefficients highest degree first.

        Multiplication by the value on the power basis of Q(zeta_n) has
        characteristic polynomial p^k with p minimal, so p is its square-free part.
        """
        K = cyclotomic_domain(self.order)
        if K is QQ:
            return [QQ(1), -self._value]
        degree = int(totient(self.order))
        powers = _zeta_powers(self.order)
        columns = []
        for i in range(degree):
            listed = list(reversed((self._value * powers[i]).to_list()))
            columns.append(listed + [QQ(0)] * (degree - len(listed)))
        rows = [[columns[j][i] for j in range(degree)] for i in range(degree)]
        charpoly = DomainMatrix(rows, (degree, degree), QQ).charpoly()
        minimal = Poly(charpoly, Symbol("t"), domain=QQ).sqf_part().monic()
        return minimal.rep.to_list()

    def __bool__(self) -> bool:
        return not self.is_zero()

    # ------------------------------------------------------------------
    # text and JSON

    def __repr__(self) -> str:
        return f"CycloNumber({self.order}, {self})"

    def __str__(self) -> str:
        terms = self.terms()
        if not terms:
            return "0"
        parts = []
        for e, c in terms:
            if e == 0:
                parts.append(format_rational(c))
            elif c == 1:
                parts.append(f"zeta{self.order}^{e}")
            else:
                parts.append(f"{format_rational(c)}*zeta{self.order}^{e}")
        return " + ".join(parts)

    def to_json(self) -> Dict:
        return {"n": self.order, "terms": [[e, format_rational(c)] for e, c in self.terms()]}

    def __reduce__(self):
        # pickled through the JSON form; sympy domain elements are not stable across versions
        return (CycloNumber.from_json, (self.to_json(), self.order))

    @classmethod
    def from_json(cls, data, order: Optional[int] = None) -> "CycloNumber":
        """Decode {"n", "terms"}; bare ints and "p/q" strings are rationals."""
        if isinstance(data, bool):
            raise InputFormatError(f"not a scalar: {data!r}")
        if isinstance(data, int):
            return cls.rational(data, order or 1)
        if isinstance(data, str):
            return cls.parse(data, order or 1)
        if not isinstance(data, dict) or "terms" not in data:
            raise InputFormatError(f"not a scalar: {data!r}")
        n = int(data.get("n", order or 1))
        raw = []
        for term in data["terms"]:
            if not isinstance(term, (list, tuple)) or len(term) != 2:
                raise InputFormatError(f"malformed scalar term {term!r}")
            e, c = term
            raw.append((int(e), parse_rational(str(c))))
        value = canonicalize(n, raw)
        return value.embed(order) if order and order != n else value

    @classmethod
    def parse(cls, text: str, order: int = 1) -> "CycloNumber":
        """Parse "-1", "1/2", "i", "-i", "zeta8", "zeta8^3" or "3/2*zeta5^2"."""
        text = text.replace(" ", "")
        if not text:
            raise InputFormatError("empty scalar")
        total = None
        for token in re.findall(r"[+-]?[^+-]+", text):
            sign = -1 if token.startswith("-") else 1
            body = token.lstrip("+-")
            coeff = QQ(1)
            if "*" in body:
                head, body = body.split("*", 1)
                coeff = parse_rational(head)
            if body == "i":
                term = cls.zeta(4, 1)
            elif body.startswith("zeta"):
                match = re.fullmatch(r"zeta(\d+)(?:\^(\d+))?", body)
                if not match:
                    raise InputFormatError(f"cannot parse scalar {text!r}")
                term = cls.zeta(int(match.group(1)), int(match.group(2) or 1))
            else:
                term = cls.rational(parse_rational(body), order)
            term = term * CycloNumber.rational(coeff * sign, term.order)
            total = term if total is None else total + term
        if total.order != order and total.is_rational():
            total = total.embed(order)
        return total


def canonicalize(order: int, raw_terms: Iterable[Tuple[int, object]]) -> CycloNumber:
    """Reduce sum c * zeta_order^e to canonical form (exponents mod n, then mod Phi_n)."""
    if order < 1:
        raise ValueError(f"conductor must be positive, got {order}")
    K = cyclotomic_domain(order)
    powers = _zeta_powers(order)
    collected: Dict[int, object] = {}
    for e, c in raw_terms:
        e = e % order
        collected[e] = collected.get(e, QQ(0)) + to_rational(c)
    value = K.zero
    for e, c in collected.items():
        if not c:
            continue
        value = value + (c * powers[e] if K is QQ else K.convert_from(c, QQ) * powers[e])
    return CycloNumber(order, value)


def cyclo_arith(a: CycloNumber, b: CycloNumber, op: str) -> CycloNumber:
    """Binary field operation named by op (add, sub, mul, div)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def primitive_root_order(z: CycloNumber) -> Optional[int]:
    """Least m >= 1 with z^m = 1, or None when z is not a root of unity.

    Roots of unity in Q(zeta_n) have order dividing lcm(2, n), so checking
    those divisors in increasing order decides the question exactly.
    """
    if z.is_zero():
        return None
    bound = z.order if z.order % 2 == 0 else 2 * z.order
    for d in divisors(bound):
        if (z ** int(d)).is_one():
            return int(d)
    return None


def common_order(values: Iterable[CycloNumber]) -> int:
    """Least conductor containing every given value."""
    result = 1
    for v in values:
        if v.is_rational():
            continue
        result = result * v.order // gcd(result, v.order)
    if result > conductor_bound():
        raise ConductorOverflow(f"common conductor {result} exceeds bound {conductor_bound()}")
    return result
