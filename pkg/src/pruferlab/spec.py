"""Declarative ring specifications: a small construction tree stored as JSON.

A document is a node ``{"kind": ..., ...}`` where kind is one of

* ``zmod`` with ``n``
* ``poly_quotient`` with ``p``, ``vars``, ``relations``
* ``product`` with ``factors``
* ``trivial_extension`` with ``base``, ``ideal_generators``, ``rank``
* ``quotient`` with ``base``, ``ideal_generators``
* ``localize`` with ``base``, ``set_generators``

Element literals are integers, expressions over the ring's generator names,
lists (one literal per factor of a product) or ``{"base": .., "module": [..]}``
for trivial extensions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Union

from .constructions import localize, quotient, trivial_extension
from .errors import ParseError, PruferLabError, SpecError
from .ideals import ideal_generated
from .parsing import check_variables, parse_expression
from .presentation import DEFAULT_PAIR_CAP, is_prime, poly_quotient
from .ring import DEFAULT_ORDER_CAP, TableRing, direct_product, zmod


def _literal_text(x) -> str:
    if isinstance(x, str):
        return x
    return json.dumps(x, separators=(",", ":"))


def _literals_text(xs) -> str:
    return ", ".join(_literal_text(x) for x in xs) or "0"


@dataclass(frozen=True)
class ZMod:
    n: int

    def describe(self) -> str:
        return f"Z/{self.n}"

    def to_json(self) -> dict:
        return {"kind": "zmod", "n": self.n}


@dataclass(frozen=True)
class PolyQuotient:
    p: int
    vars: tuple[str, ...]
    relations: tuple[str, ...]

    def describe(self) -> str:
        return f"F_{self.p}[{','.join(self.vars)}]/({', '.join(self.relations)})"

    def to_json(self) -> dict:
        return {"kind": "poly_quotient", "p": self.p, "vars": list(self.vars), "relations": list(self.relations)}


@dataclass(frozen=True)
class Product:
    factors: tuple["RingSpec", ...]

    def describe(self) -> str:
        return " x ".join(_wrap(f) for f in self.factors)

    def to_json(self) -> dict:
        return {"kind": "product", "factors": [f.to_json() for f in self.factors]}


@dataclass(frozen=True)
class TrivialExtension:
    base: "RingSpec"
    ideal_generators: tuple
    rank: int = 1

    def describe(self) -> str:
        base = _wrap(self.base)
        module = f"({base}/({_literals_text(self.ideal_generators)}))"
        if self.rank > 1:
            module += f"^{self.rank}"
        return f"{base} ∝ {module}"

    def to_json(self) -> dict:
        return {"kind": "trivial_extension", "base": self.base.to_json(),
                "ideal_generators": list(self.ideal_generators), "rank": self.rank}


@dataclass(frozen=True)
class Quotient:
    base: "RingSpec"
    ideal_generators: tuple

    def describe(self) -> str:
        return f"{_wrap(self.base)}/({_literals_text(self.ideal_generators)})"

    def to_json(self) -> dict:
        return {"kind": "quotient", "base": self.base.to_json(), "ideal_generators": list(self.ideal_generators)}


@dataclass(frozen=True)
class Localize:
    base: "RingSpec"
    set_generators: tuple

    def describe(self) -> str:
        return f"{_wrap(self.base)}[<{_literals_text(self.set_generators)}>^-1]"

    def to_json(self) -> dict:
        return {"kind": "localize", "base": self.base.to_json(), "set_generators": list(self.set_generators)}


RingSpec = Union[ZMod, PolyQuotient, Product, TrivialExtension, Quotient, Localize]


def _wrap(spec: RingSpec) -> str:
    text = spec.describe()
    return f"({text})" if isinstance(spec, (Product, TrivialExtension, Quotient, Localize)) else text


# -- parsing ---------------------------------------------------------------------

def _field(node: dict, key: str, path: str, kind: type | tuple):
    if key not in node:
        raise SpecError(f"missing field {key!r}", path)
    value = node[key]
    if isinstance(value, bool) or not isinstance(value, kind):
        raise SpecError(f"field {key!r} has the wrong type", f"{path}.{key}")
    return value


def _literals(node: dict, key: str, path: str) -> tuple:
    values = _field(node, key, path, list)
    for i, v in enumerate(values):
        if isinstance(v, bool) or not isinstance(v, (int, str, list, dict)):
            raise SpecError("element literal must be an integer, string, list or object", f"{path}.{key}[{i}]")
        if isinstance(v, str):
            try:
                parse_expression(v)
            except SpecError:
                raise
            except PruferLabError as exc:
                raise SpecError(str(exc), f"{path}.{key}[{i}]") from None
    return tuple(values)


_KEYS = {
    "zmod": {"n"},
    "poly_quotient": {"p", "vars", "relations"},
    "product": {"factors"},
    "trivial_extension": {"base", "ideal_generators", "rank"},
    "quotient": {"base", "ideal_generators"},
    "localize": {"base", "set_generators"},
}


def parse_spec(node: Any, path: str = "$") -> RingSpec:
    """Turn a decoded JSON node into a spec tree; errors carry a JSON path."""
    if not isinstance(node, dict):
        raise SpecError("spec node must be an object", path)
    kind = node.get("kind")
    if kind not in _KEYS:
        raise SpecError(f"unknown kind {kind!r}", path)
    extra = set(node) - _KEYS[kind] - {"kind"}
    if extra:
        raise SpecError(f"unexpected fields {sorted(extra)}", path)

    if kind == "zmod":
        n = _field(node, "n", path, int)
        if n < 1:
            raise SpecError("n must be at least 1", f"{path}.n")
        return ZMod(n)
    if kind == "poly_quotient":
        p = _field(node, "p", path, int)
        if not is_prime(p):
            raise SpecError(f"{p} is not prime", f"{path}.p")
        names = _field(node, "vars", path, list)
        if not names or not all(isinstance(v, str) and v.isidentifier() for v in names):
            raise SpecError("vars must be a non-empty list of names", f"{path}.vars")
        if len(set(names)) != len(names):
            raise SpecError("variable names must be distinct", f"{path}.vars")
        relations = _field(node, "relations", path, list)
        for i, r in enumerate(relations):
            where = f"{path}.relations[{i}]"
            if not isinstance(r, str):
                raise SpecError("relation must be a string", where)
            try:
                check_variables(parse_expression(r), set(names))
            except SpecError:
                raise
            except PruferLabError as exc:
                raise SpecError(str(exc), where) from None
        return PolyQuotient(p, tuple(names), tuple(relations))
    if kind == "product":
        factors = _field(node, "factors", path, list)
        if not factors:
            raise SpecError("product needs at least one factor", f"{path}.factors")
        return Product(tuple(parse_spec(f, f"{path}.factors[{i}]") for i, f in enumerate(factors)))
    base = parse_spec(_field(node, "base", path, dict), f"{path}.base")
    if kind == "trivial_extension":
        rank = node.get("rank", 1)
        if isinstance(rank, bool) or not isinstance(rank, int) or rank < 1:
            raise SpecError("rank must be a positive integer", f"{path}.rank")
        return TrivialExtension(base, _literals(node, "ideal_generators", path), rank)
    if kind == "quotient":
        return Quotient(base, _literals(node, "ideal_generators", path))
    gens = _literals(node, "set_generators", path)
    if not gens:
        raise SpecError("a multiplicative set needs at least one generator", f"{path}.set_generators")
    return Localize(base, gens)


def loads(text: str) -> RingSpec:
    try:
        node = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    return parse_spec(node)


def dumps(spec: RingSpec) -> str:
    return json.dumps(spec.to_json(), sort_keys=True)


def load(path) -> RingSpec:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


# -- building -------------------------------------------------------------------

def _elements(R: TableRing, literals, path: str) -> list[int]:
    out = []
    for i, lit in enumerate(literals):
        try:
            out.append(R.element(lit))
        except ParseError as exc:
            raise SpecError(str(exc), f"{path}[{i}]") from None
    return out


def build(spec: RingSpec, order_cap: int = DEFAULT_ORDER_CAP, pair_cap: int = DEFAULT_PAIR_CAP) -> TableRing:
    """Construct the table ring; ``provenance`` is set to the construction tree."""
    if isinstance(spec, ZMod):
        R = zmod(spec.n, order_cap)
    elif isinstance(spec, PolyQuotient):
        R = poly_quotient(spec.p, spec.vars, list(spec.relations), order_cap, pair_cap)
    elif isinstance(spec, Product):
        R = direct_product([build(f, order_cap, pair_cap) for f in spec.factors], order_cap)
    elif isinstance(spec, TrivialExtension):
        A = build(spec.base, order_cap, pair_cap)
        I = ideal_generated(A, _elements(A, spec.ideal_generators, "ideal_generators"))
        R = trivial_extension(A, I, spec.rank, order_cap)
    elif isinstance(spec, Quotient):
        A = build(spec.base, order_cap, pair_cap)
        R, _ = quotient(A, ideal_generated(A, _elements(A, spec.ideal_generators, "ideal_generators")))
    elif isinstance(spec, Localize):
        A = build(spec.base, order_cap, pair_cap)
        R, _ = localize(A, _elements(A, spec.set_generators, "set_generators"))
    else:
        raise TypeError(f"not a ring spec: {spec!r}")
    R.provenance = spec
    return R
