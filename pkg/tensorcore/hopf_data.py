"""
Sparse structure-constant container for finite-dimensional algebras,
coalgebras, bialgebras and Hopf algebras over Q(zeta_n).
"""
import hashlib
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from exactfield import CycloNumber, add_into
from errors import DimensionMismatch, InputFormatError

logger = logging.getLogger(__name__)

LEVELS = ("algebra", "coalgebra", "bialgebra", "hopf")

Vector = Dict[int, CycloNumber]
Tensor = Dict[Tuple[int, int], CycloNumber]
LinearMap = Dict[int, Vector]


def _clean(vec: Dict[Any, CycloNumber]) -> Dict[Any, CycloNumber]:
    return {k: v for k, v in vec.items() if v}


@dataclass
class HopfData:
    """Structure constants on a fixed ordered basis b_0..b_{d-1}.

    mult[(i, j)] is the vector b_i b_j, comult[i] the tensor Delta(b_i) keyed
    by (j, k), antipode[j] the vector S(b_j). Tables a level does not need may
    still be present (a braided Hopf algebra carries both sides as
    "coalgebra"). Unpopulated tables are None.
    """
    dim: int
    order: int = 1
    labels: List[str] = None
    mult: Optional[Dict[Tuple[int, int], Vector]] = None
    unit: Optional[Vector] = None
    comult: Optional[Dict[int, Tensor]] = None
    counit: Optional[Vector] = None
    antipode: Optional[LinearMap] = None
    level: str = "hopf"
    generators: Optional[List[int]] = None
    dual_generators: Optional[List[int]] = None
    name: str = ""

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionMismatch(f"dimension must be positive, got {self.dim}")
        if self.labels is None:
            self.labels = [f"b{i}" for i in range(self.dim)]
        if len(self.labels) != self.dim:
            raise DimensionMismatch(f"{len(self.labels)} labels for dimension {self.dim}")
        if self.level not in LEVELS:
            raise InputFormatError(f"unknown level {self.level!r}")
        if self.level == "hopf" and self.antipode is None:
            logger.warning(f"{self.name or 'HopfData'}: no antipode given, level lowered to bialgebra")
            self.level = "bialgebra"
        if self.mult is not None:
            self.mult = {k: _clean(v) for k, v in self.mult.items() if _clean(v)}
        if self.comult is not None:
            self.comult = {k: _clean(v) for k, v in self.comult.items() if _clean(v)}
        if self.antipode is not None:
            self.antipode = {k: _clean(v) for k, v in self.antipode.items() if _clean(v)}
        if self.unit is not None:
            self.unit = _clean(self.unit)
        if self.counit is not None:
            self.counit = _clean(self.counit)
        self._check_indices()

    def _check_indices(self):
        d = self.dim
        bad = []
        for (i, j), vec in (self.mult or {}).items():
            if not (0 <= i < d and 0 <= j < d) or any(not 0 <= k < d for k in vec):
                bad.append(("mult", i, j))
        for i, tensor in (self.comult or {}).items():
            if not 0 <= i < d or any(not (0 <= a < d and 0 <= b < d) for a, b in tensor):
                bad.append(("comult", i))
        for j, vec in (self.antipode or {}).items():
            if not 0 <= j < d or any(not 0 <= i < d for i in vec):
                bad.append(("antipode", j))
        if bad:
            raise DimensionMismatch(f"structure constants outside dimension {d}: {bad[:3]}")

    # ------------------------------------------------------------------
    # level bookkeeping

    @property
    def has_algebra(self) -> bool:
        return self.mult is not None and self.unit is not None

    @property
    def has_coalgebra(self) -> bool:
        return self.comult is not None and self.counit is not None

    @property
    def has_antipode(self) -> bool:
        return self.antipode is not None

    def satisfies_level(self, level: str) -> bool:
        needs = {
            "algebra": self.has_algebra,
            "coalgebra": self.has_coalgebra,
            "bialgebra": self.has_algebra and self.has_coalgebra,
            "hopf": self.has_algebra and self.has_coalgebra and self.has_antipode,
        }
        return needs[level]

    # ------------------------------------------------------------------
    # evaluation on vectors

    def zero(self) -> CycloNumber:
        return CycloNumber.zero(self.order)

    def one(self) -> CycloNumber:
        return CycloNumber.one(self.order)

    def basis_vector(self, i: int) -> Vector:
        return {i: self.one()}

    def unit_vector(self) -> Vector:
        return dict(self.unit or {})

    def basis_product(self, i: int, j: int) -> Vector:
        return self.mult.get((i, j), {})

    def product(self, x: Vector, y: Vector) -> Vector:
        out: Vector = {}
        for i, a in x.items():
            for j, b in y.items():
                vec = self.mult.get((i, j))
                if vec:
                    add_into(out, vec, a * b)
        return out

    def product_many(self, *factors: Vector) -> Vector:
        result = self.unit_vector()
        for f in factors:
            result = self.product(result, f)
        return result

    def basis_coproduct(self, i: int) -> Tensor:
        return self.comult.get(i, {})

    def coproduct(self, x: Vector) -> Tensor:
        out: Tensor = {}
        for i, a in x.items():
            tensor = self.comult.get(i)
            if tensor:
                add_into(out, tensor, a)
        return out

    def counit_of(self, x: Vector) -> CycloNumber:
        total = self.zero()
        for i, a in x.items():
            c = self.counit.get(i)
            if c:
                total = total + a * c
        return total

    def antipode_of(self, x: Vector) -> Vector:
        out: Vector = {}
        for j, a in x.items():
            vec = self.antipode.get(j)
            if vec:
                add_into(out, vec, a)
        return out

    def tensor_product(self, s: Tensor, t: Tensor) -> Tensor:
        """Componentwise product in H (x) H."""
        out: Tensor = {}
        for (a, b), x in s.items():
            for (c, d), y in t.items():
                left = self.mult.get((a, c))
                right = self.mult.get((b, d))
                if not left or not right:
                    continue
                coeff = x * y
                for k, u in left.items():
                    for l, v in right.items():
                        key = (k, l)
                        value = coeff * u * v
                        current = out.get(key)
                        total = value if current is None else current + value
                        if total:
                            out[key] = total
                        elif current is not None:
                            del out[key]
        return out

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InputFormatError(f"no basis element labelled {label!r}")

    def format_vector(self, x: Vector) -> str:
        if not x:
            return "0"
        return " + ".join(f"({c})*{self.labels[i]}" for i, c in sorted(x.items()))

    # ------------------------------------------------------------------
    # JSON

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "n": self.order,
            "dim": self.dim,
            "labels": list(self.labels),
            "level": self.level,
        }
        dense = lambda vec: [vec[i].to_json() if i in vec else 0 for i in range(self.dim)]
        if self.unit is not None:
            data["unit"] = dense(self.unit)
        if self.counit is not None:
            data["counit"] = dense(self.counit)
        if self.mult is not None:
            data["mult"] = [
                [i, j, k, c.to_json()]
                for (i, j) in sorted(self.mult)
                for k, c in sorted(self.mult[(i, j)].items())
            ]
        if self.comult is not None:
            data["comult"] = [
                [i, j, k, c.to_json()]
                for i in sorted(self.comult)
                for (j, k), c in sorted(self.comult[i].items())
            ]
        if self.antipode is not None:
            data["antipode"] = [
                [i, j, c.to_json()]
                for j in sorted(self.antipode)
                for i, c in sorted(self.antipode[j].items())
            ]
            data["antipode"].sort(key=lambda row: (row[0], row[1]))
        if self.generators is not None:
            data["generators"] = list(self.generators)
        if self.dual_generators is not None:
            data["dual_generators"] = list(self.dual_generators)
        if self.name:
            data["name"] = self.name
        return data

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "HopfData":
        try:
            order = int(data.get("n", 1))
            dim = int(data["dim"])
            scalar = lambda s: CycloNumber.from_json(s, order)

            def dense(key):
                if key not in data:
                    return None
                values = data[key]
                if len(values) != dim:
                    raise DimensionMismatch(f"{key} has {len(values)} entries, expected {dim}")
                return {i: scalar(s) for i, s in enumerate(values)}

            mult = None
            if "mult" in data:
                mult = {}
                for i, j, k, s in data["mult"]:
                    add_into(mult.setdefault((int(i), int(j)), {}), {int(k): scalar(s)})
            comult = None
            if "comult" in data:
                comult = {}
                for i, j, k, s in data["comult"]:
                    add_into(comult.setdefault(int(i), {}), {(int(j), int(k)): scalar(s)})
            antipode = None
            if "antipode" in data:
                antipode = {}
                for i, j, s in data["antipode"]:
                    add_into(antipode.setdefault(int(j), {}), {int(i): scalar(s)})
            return cls(
                dim=dim,
                order=order,
                labels=data.get("labels"),
                mult=mult,
                unit=dense("unit"),
                comult=comult,
                counit=dense("counit"),
                antipode=antipode,
                level=data.get("level", "hopf"),
                generators=data.get("generators"),
                dual_generators=data.get("dual_generators"),
                name=data.get("name", ""),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise InputFormatError(f"malformed HopfData JSON: {e}")

    @classmethod
    def load(cls, path: Union[str, Path]) -> "HopfData":
        with open(path, 'r') as f:
            data = json.load(f)
        h = cls.from_json(data)
        logger.info(f"Loaded {h.level} of dimension {h.dim} over Q(zeta_{h.order}) from {path}")
        return h

    def save(self, path: Union[str, Path]) -> str:
        path = Path(path)
        if path.parent and not path.parent.exists():
            path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, 'w') as f:
            json.dump(self.to_json(), f, indent=2, sort_keys=True)
        logger.info(f"Saved {self.level} of dimension {self.dim} to {path}")
        return str(path)

    def fingerprint(self) -> str:
        payload = json.dumps(self.to_json(), sort_keys=True)
        return hashlib.sha256(payload.encode()).hexdigest()

    def with_tables(self, **changes) -> "HopfData":
        """Copy with some tables replaced."""
        fields = {
            "dim": self.dim, "order": self.order, "labels": list(self.labels),
            "mult": self.mult, "unit": self.unit, "comult": self.comult,
            "counit": self.counit, "antipode": self.antipode, "level": self.level,
            "generators": self.generators, "dual_generators": self.dual_generators,
            "name": self.name,
        }
        fields.update(changes)
        return HopfData(**fields)


def compose_maps(f: LinearMap, g: LinearMap, dim: int) -> LinearMap:
    """f o g as an image dict."""
    out: LinearMap = {}
    for j in range(dim):
        image: Vector = {}
        for k, a in g.get(j, {}).items():
            if k in f:
                add_into(image, f[k], a)
        if image:
            out[j] = image
    return out


def apply_map(f: LinearMap, x: Vector) -> Vector:
    out: Vector = {}
    for j, a in x.items():
        if j in f:
            add_into(out, f[j], a)
    return out


def identity_map(dim: int, order: int = 1) -> LinearMap:
    one = CycloNumber.one(order)
    return {i: {i: one} for i in range(dim)}


def map_to_json(f: LinearMap, rows: int, cols: int) -> Dict[str, Any]:
    return {
        "rows": rows,
        "cols": cols,
        "entries": sorted([[i, j, c.to_json()] for j, vec in f.items() for i, c in vec.items()],
                          key=lambda row: (row[0], row[1])),
    }


def map_from_json(data: Dict[str, Any], order: int = 1) -> Tuple[LinearMap, int, int]:
    """Decode {"rows", "cols", "entries": [[i, j, s]]}; s sits at row i, column j."""
    try:
        f: LinearMap = {}
        for i, j, s in data["entries"]:
            add_into(f.setdefault(int(j), {}), {int(i): CycloNumber.from_json(s, order)})
        return {j: v for j, v in f.items() if v}, int(data["rows"]), int(data["cols"])
    except (KeyError, TypeError, ValueError) as e:
        raise InputFormatError(f"malformed linear map JSON: {e}")
