"""Finite commutative rings stored as explicit Cayley tables.

Elements are plain integer indices ``0 .. order-1``. Every constructor in the
package compiles down to a :class:`TableRing`, and every ring is validated
against the axioms before it is handed out.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Sequence

import numpy as np

from .errors import AxiomViolation, OrderLimitExceeded, RingMismatch, SpecError, ZeroRing
from .parsing import check_variables, evaluate, parse_expression

DEFAULT_ORDER_CAP = 4096


def index_dtype(order: int):
    return np.int16 if order < 2**15 else np.int32


def check_order(order: int, order_cap: int) -> None:
    if order > order_cap:
        raise OrderLimitExceeded(f"ring of order {order} exceeds the order cap {order_cap}")


@dataclass(eq=False, repr=False)
class TableRing:
    """A finite commutative ring with identity given by addition and multiplication tables.

    ``labels`` are display strings for elements, ``symbols`` maps generator
    names (``x``, ``y`` ...) to element indices so that element literals can be
    written in the polynomial grammar, and ``reader`` handles compound literals
    (lists for products, dicts for trivial extensions).
    """

    add: np.ndarray
    mul: np.ndarray
    zero: int = 0
    one: int = 1
    provenance: Any = None
    labels: Sequence[str] | None = None
    symbols: dict[str, int] = field(default_factory=dict)
    reader: Callable[[Any], int] | None = None
    parts: tuple = ()
    _cache: dict = field(default_factory=dict, init=False)

    def __post_init__(self):
        dt = index_dtype(self.add.shape[0])
        self.add = np.ascontiguousarray(self.add, dtype=dt)
        self.mul = np.ascontiguousarray(self.mul, dtype=dt)
        self.add.setflags(write=False)
        self.mul.setflags(write=False)
        self.zero = int(self.zero)
        self.one = int(self.one)

    def __repr__(self):
        name = describe(self.provenance) if self.provenance is not None else "TableRing"
        return f"<{name} order={self.order}>"

    @property
    def order(self) -> int:
        return int(self.add.shape[0])

    @property
    def is_zero_ring(self) -> bool:
        return self.order == 1

    @cached_property
    def multiples(self) -> np.ndarray:
        """``multiples[k]`` is k·1 for k = 0 .. char-1."""
        out = [self.zero]
        x = self.one
        while x != self.zero:
            out.append(x)
            x = int(self.add[x, self.one])
        return np.array(out, dtype=np.int64)

    @property
    def char(self) -> int:
        return len(self.multiples)

    @cached_property
    def neg(self) -> np.ndarray:
        return np.argmax(self.add == self.zero, axis=1)

    @cached_property
    def digest(self) -> str:
        h = hashlib.sha256()
        h.update(f"{self.order}:{self.zero}:{self.one}:".encode())
        h.update(self.add.astype(np.int32).tobytes())
        h.update(self.mul.astype(np.int32).tobytes())
        return h.hexdigest()

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    def multiple(self, n: int) -> int:
        return int(self.multiples[n % self.char])

    def power(self, a: int, k: int) -> int:
        result = self.one
        for _ in range(k):
            result = int(self.mul[result, a])
        return result

    def element(self, literal) -> int:
        """Resolve an element literal: an integer (n·1), an expression over ``symbols``,
        or a compound literal understood by ``reader``."""
        if isinstance(literal, bool):
            raise SpecError(f"boolean is not an element literal: {literal!r}")
        if isinstance(literal, (int, np.integer)):
            return self.multiple(int(literal))
        if isinstance(literal, str):
            node = parse_expression(literal)
            check_variables(node, self.symbols)
            return evaluate(node, _ElementAlgebra(self))
        if self.reader is not None:
            return self.reader(literal)
        raise SpecError(f"cannot read element literal {literal!r} in this ring")


class _ElementAlgebra:
    def __init__(self, ring: TableRing):
        self.ring = ring

    def const(self, n):
        return self.ring.multiple(n)

    def var(self, name):
        return self.ring.symbols[name]

    def add(self, a, b):
        return int(self.ring.add[a, b])

    def mul(self, a, b):
        return int(self.ring.mul[a, b])

    def neg(self, a):
        return int(self.ring.neg[a])


def describe(spec) -> str:
    text = getattr(spec, "describe", None)
    return text() if callable(text) else str(spec)


def additive_generators(R: TableRing) -> list[int]:
    """Greedy generating set of the additive structure.

    Generation is by repeated right-addition from zero, which is exactly what
    the reduced axiom checks in :func:`check_axioms` need.
    """
    n = R.order
    reached = np.zeros(n, dtype=bool)
    reached[R.zero] = True
    gens: list[int] = []
    while not reached.all():
        g = int(np.flatnonzero(~reached)[0])
        gens.append(g)
        frontier = np.flatnonzero(reached)
        while frontier.size:
            new = np.unique(R.add[np.ix_(frontier, gens)])
            new = new[~reached[new]]
            reached[new] = True
            frontier = new
    return gens


def check_axioms(R: TableRing) -> None:
    """Verify the commutative-ring axioms, raising AxiomViolation on the first failure.

    Commutativity, identities and inverses are checked on all pairs. Additive
    associativity and distributivity are checked for all a, b against each
    additive generator g, and multiplicative associativity on generator
    triples; by bilinearity that covers all triples (O(n^2 |G|) not O(n^3)).
    """
    n = R.order
    add, mul = R.add, R.mul
    idx = np.arange(n)
    if add.shape != (n, n) or mul.shape != (n, n):
        raise AxiomViolation("tables must be square and of equal size")
    for name, t in (("add", add), ("mul", mul)):
        if t.min() < 0 or t.max() >= n:
            raise AxiomViolation(f"{name} table has entries outside 0..{n - 1}")
    if not (0 <= R.zero < n and 0 <= R.one < n):
        raise AxiomViolation("zero/one out of range")
    if n > 1 and R.zero == R.one:
        raise AxiomViolation("one equals zero in a ring with more than one element")
    if not np.array_equal(add, add.T):
        raise AxiomViolation("addition is not commutative")
    if not np.array_equal(add[R.zero], idx):
        raise AxiomViolation("zero is not an additive identity")
    if not np.array_equal(np.sort(add, axis=1), np.broadcast_to(idx, (n, n))):
        raise AxiomViolation("addition rows are not permutations (no inverses)")
    if not np.array_equal(mul, mul.T):
        raise AxiomViolation("multiplication is not commutative")
    if not np.array_equal(mul[R.one], idx):
        raise AxiomViolation("one is not a multiplicative identity")
    if not (mul[R.zero] == R.zero).all():
        raise AxiomViolation("zero does not annihilate")
    gens = additive_generators(R)
    for g in gens:
        if not np.array_equal(add[add, g], add[:, add[:, g]]):
            raise AxiomViolation(f"addition is not associative (generator {g})")
        lhs = mul[:, add[:, g]]
        rhs = add[mul, np.broadcast_to(mul[:, g][:, None], (n, n))]
        if not np.array_equal(lhs, rhs):
            raise AxiomViolation(f"multiplication does not distribute (generator {g})")
    for a, b, c in itertools.product(gens, repeat=3):
        if mul[mul[a, b], c] != mul[a, mul[b, c]]:
            raise AxiomViolation(f"multiplication is not associative at ({a}, {b}, {c})")


def validated(R: TableRing) -> TableRing:
    check_axioms(R)
    return R


@dataclass(eq=False)
class RingMap:
    source: TableRing
    target: TableRing
    image: np.ndarray

    def __post_init__(self):
        self.image = np.asarray(self.image, dtype=np.int64)
        if self.image.shape != (self.source.order,):
            raise AxiomViolation("map image table has the wrong length")

    def __call__(self, x: int) -> int:
        return int(self.image[x])

    def is_homomorphism(self) -> bool:
        s, t, f = self.source, self.target, self.image
        if f.min() < 0 or f.max() >= t.order:
            return False
        if f[s.zero] != t.zero or f[s.one] != t.one:
            return False
        if not np.array_equal(f[s.add], t.add[f[:, None], f[None, :]]):
            return False
        return bool(np.array_equal(f[s.mul], t.mul[f[:, None], f[None, :]]))

    def check(self) -> "RingMap":
        if not self.is_homomorphism():
            raise AxiomViolation("map is not a ring homomorphism")
        return self

    def is_injective(self) -> bool:
        return len(np.unique(self.image)) == self.source.order

    def is_surjective(self) -> bool:
        return len(np.unique(self.image)) == self.target.order

    def is_bijective(self) -> bool:
        return self.source.order == self.target.order and self.is_injective()

    def kernel(self) -> list[int]:
        return np.flatnonzero(self.image == self.target.zero).tolist()

    def then(self, other: "RingMap") -> "RingMap":
        if other.source is not self.target:
            raise RingMismatch("maps are not composable")
        return RingMap(self.source, other.target, other.image[self.image])


def identity_map(R: TableRing) -> RingMap:
    return RingMap(R, R, np.arange(R.order))


def require_nonzero(R: TableRing) -> None:
    if R.is_zero_ring:
        raise ZeroRing("the zero ring is excluded from all deciders")


# -- element-level structure ---------------------------------------------------

def _mask(R: TableRing, key: str, compute) -> np.ndarray:
    if key not in R._cache:
        R._cache[key] = compute()
    return R._cache[key]


def unit_mask(R: TableRing) -> np.ndarray:
    return _mask(R, "units", lambda: (R.mul == R.one).any(axis=1))


def zero_divisor_mask(R: TableRing) -> np.ndarray:
    """Zero divisors including 0 itself, so that regular = cancellable."""

    def compute():
        nonzero = np.flatnonzero(np.arange(R.order) != R.zero)
        return (R.mul[:, nonzero] == R.zero).any(axis=1)

    return _mask(R, "zero_divisors", compute)


def units(R: TableRing) -> list[int]:
    require_nonzero(R)
    return np.flatnonzero(unit_mask(R)).tolist()


def zero_divisors(R: TableRing) -> list[int]:
    require_nonzero(R)
    return np.flatnonzero(zero_divisor_mask(R)).tolist()


def regular_elements(R: TableRing) -> list[int]:
    require_nonzero(R)
    return np.flatnonzero(~zero_divisor_mask(R)).tolist()


def inverse(R: TableRing, a: int) -> int | None:
    hits = np.flatnonzero(R.mul[a] == R.one)
    return int(hits[0]) if hits.size else None


def idempotents(R: TableRing) -> list[int]:
    return np.flatnonzero(np.diagonal(R.mul) == np.arange(R.order)).tolist()


def primitive_idempotents(R: TableRing) -> list[int]:
    """Nonzero idempotents with no idempotent strictly below them (ef = f)."""
    idem = [e for e in idempotents(R) if e != R.zero]
    return [e for e in idem if not any(f != e and R.mul[e, f] == f for f in idem)]


def is_total(R: TableRing) -> bool:
    """Every element is a unit or a zero divisor (always true for finite rings)."""
    require_nonzero(R)
    return bool((unit_mask(R) | zero_divisor_mask(R)).all())


def total_quotient_ring(R: TableRing) -> tuple[TableRing, RingMap]:
    """Tot(R) for a finite ring: R itself, once it is checked that every regular element is a unit."""
    require_nonzero(R)
    regular = ~zero_divisor_mask(R)
    if (regular & ~unit_mask(R)).any():
        bad = int(np.flatnonzero(regular & ~unit_mask(R))[0])
        raise AxiomViolation(f"regular element {bad} is not a unit; cannot happen in a finite ring")
    return R, identity_map(R)


def is_von_neumann_regular(R: TableRing) -> bool:
    """For every a there is x with a = a^2 x."""
    squares = np.diagonal(R.mul)
    return bool((R.mul[squares] == np.arange(R.order)[:, None]).any(axis=1).all())


def nilpotency_index(R: TableRing, a: int) -> int:
    """Least k with a^k = 0, or 0 if a is not nilpotent."""
    x = a
    for k in range(1, R.order + 1):
        if x == R.zero:
            return k
        x = int(R.mul[x, a])
    return 0


# -- basic constructors --------------------------------------------------------

def zmod(n: int, order_cap: int = DEFAULT_ORDER_CAP) -> TableRing:
    if n < 1:
        raise ValueError("zmod needs n >= 1")
    check_order(n, order_cap)
    i = np.arange(n)
    R = TableRing(
        add=(i[:, None] + i[None, :]) % n,
        mul=(i[:, None] * i[None, :]) % n,
        zero=0,
        one=1 % n,
        labels=[str(k) for k in range(n)],
    )
    return validated(R)


def direct_product(rings: Sequence[TableRing], order_cap: int = DEFAULT_ORDER_CAP) -> TableRing:
    """Componentwise product; index is mixed radix with the first factor most significant."""
    if not rings:
        raise ValueError("direct_product needs at least one factor")
    for R in rings:
        require_nonzero(R)
    order = int(np.prod([R.order for R in rings]))
    check_order(order, order_cap)
    add = rings[0].add.astype(np.int32)
    mul = rings[0].mul.astype(np.int32)
    for R in rings[1:]:
        m = R.order
        k = add.shape[0]
        add = (add[:, None, :, None] * m + R.add[None, :, None, :]).reshape(k * m, k * m)
        mul = (mul[:, None, :, None] * m + R.mul[None, :, None, :]).reshape(k * m, k * m)
    strides = product_strides(rings)
    zero = sum(R.zero * s for R, s in zip(rings, strides))
    one = sum(R.one * s for R, s in zip(rings, strides))
    labels = ["(" + ",".join(R.label(c) for R, c in zip(rings, combo)) + ")"
              for combo in itertools.product(*(range(R.order) for R in rings))]

    def reader(literal):
        if not isinstance(literal, list) or len(literal) != len(rings):
            raise SpecError(f"product element literal must be a list of {len(rings)} components")
        return sum(R.element(lit) * s for R, lit, s in zip(rings, literal, strides))

    P = TableRing(add=add, mul=mul, zero=zero, one=one, labels=labels, reader=reader,
                  parts=tuple(rings))
    return validated(P)


def product_strides(rings: Sequence[TableRing]) -> list[int]:
    strides = []
    s = 1
    for R in reversed(rings):
        strides.append(s)
        s *= R.order
    return strides[::-1]


def projections(P: TableRing) -> list[RingMap]:
    """Canonical projections of a ring built by :func:`direct_product`."""
    if not P.parts:
        raise RingMismatch("ring was not built as a direct product")
    idx = np.arange(P.order)
    return [RingMap(P, R, (idx // s) % R.order).check()
            for R, s in zip(P.parts, product_strides(P.parts))]


def corner_ring(R: TableRing, e: int) -> tuple[TableRing, RingMap, np.ndarray]:
    """The ring eR with identity e, the map r -> er onto it, and the inclusion eR -> R.

    Element order in eR follows element order in R, so the same corner taken
    from isomorphic-by-construction rings yields identical tables.
    """
    if R.mul[e, e] != e:
        raise AxiomViolation(f"{e} is not idempotent")
    elements = np.unique(R.mul[e])
    position = np.full(R.order, -1, dtype=np.int64)
    position[elements] = np.arange(len(elements))
    sub = np.ix_(elements, elements)
    labels = [R.label(int(x)) for x in elements]
    symbols = {name: int(position[R.mul[e, x]]) for name, x in R.symbols.items()}

    def reader(literal):
        return int(position[R.mul[e, R.element(literal)]])

    C = TableRing(
        add=position[R.add[sub]],
        mul=position[R.mul[sub]],
        zero=int(position[R.zero]),
        one=int(position[e]),
        labels=labels,
        symbols=symbols,
        reader=reader,
    )
    proj = RingMap(R, C, position[R.mul[e]])
    return C, proj, elements.astype(np.int64)
