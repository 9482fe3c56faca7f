"""Quotients F_p[x_1..x_k]/I compiled to table rings through Groebner-basis normal forms.

Monomials are exponent tuples; the monomial order is graded lexicographic with
the declared variable order (first variable largest).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import InfiniteQuotient, PairCapExceeded, SelfCheckFailed
from .parsing import check_variables, evaluate, parse_expression
from .ring import DEFAULT_ORDER_CAP, TableRing, check_order, validated

Monomial = tuple[int, ...]

DEFAULT_PAIR_CAP = 20_000


def grlex_key(m: Monomial):
    return (sum(m), m)


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % k for k in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class MultiPoly:
    """Polynomial over F_p; ``terms`` is sorted by decreasing monomial and has no zero coefficients."""

    p: int
    variables: tuple[str, ...]
    terms: tuple[tuple[Monomial, int], ...]

    @classmethod
    def from_dict(cls, p: int, variables: Sequence[str], coeffs: dict) -> "MultiPoly":
        items = [(m, c % p) for m, c in coeffs.items() if c % p]
        items.sort(key=lambda t: grlex_key(t[0]), reverse=True)
        return cls(p, tuple(variables), tuple(items))

    @classmethod
    def constant(cls, p, variables, c) -> "MultiPoly":
        return cls.from_dict(p, variables, {(0,) * len(variables): c})

    @classmethod
    def monomial(cls, p, variables, m: Monomial, c: int = 1) -> "MultiPoly":
        return cls.from_dict(p, variables, {tuple(m): c})

    def as_dict(self) -> dict:
        return dict(self.terms)

    def _like(self, coeffs: dict) -> "MultiPoly":
        return MultiPoly.from_dict(self.p, self.variables, coeffs)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        d = self.as_dict()
        for m, c in other.terms:
            d[m] = d.get(m, 0) + c
        return self._like(d)

    def __neg__(self) -> "MultiPoly":
        return self._like({m: -c for m, c in self.terms})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        d: dict = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = tuple(a + b for a, b in zip(m1, m2))
                d[m] = d.get(m, 0) + c1 * c2
        return self._like(d)

    def scale(self, c: int, shift: Monomial | None = None) -> "MultiPoly":
        if shift is None:
            return self._like({m: c * k for m, k in self.terms})
        return self._like({tuple(a + b for a, b in zip(m, shift)): c * k for m, k in self.terms})

    @property
    def leading_monomial(self) -> Monomial:
        return self.terms[0][0]

    @property
    def leading_coefficient(self) -> int:
        return self.terms[0][1]

    def monic(self) -> "MultiPoly":
        return self.scale(pow(self.leading_coefficient, -1, self.p))

    def format(self, sep: str = " + ") -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.terms:
            factors = [v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, m) if e]
            if not factors:
                parts.append(str(c))
            else:
                parts.append("*".join(([str(c)] if c != 1 else []) + factors))
        return sep.join(parts)

    def __str__(self):
        return self.format()


class _PolyAlgebra:
    def __init__(self, p, variables):
        self.p, self.variables = p, tuple(variables)

    def const(self, n):
        return MultiPoly.constant(self.p, self.variables, n)

    def var(self, name):
        m = tuple(int(v == name) for v in self.variables)
        return MultiPoly.monomial(self.p, self.variables, m)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a


def parse_poly(text: str, variables: Sequence[str], p: int) -> MultiPoly:
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    node = parse_expression(text)
    check_variables(node, variables)
    return evaluate(node, _PolyAlgebra(p, variables))


# -- Groebner bases ------------------------------------------------------------

def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def reduce(f: MultiPoly, basis: Sequence[MultiPoly]) -> MultiPoly:
    """Full normal form of f modulo ``basis`` (assumed monic)."""
    p = f.p
    work = f.as_dict()
    remainder: dict = {}
    while work:
        m = max(work, key=grlex_key)
        c = work[m]
        for g in basis:
            lm = g.leading_monomial
            if divides(lm, m):
                shift = tuple(a - b for a, b in zip(m, lm))
                for gm, gc in g.terms:
                    t = tuple(a + b for a, b in zip(gm, shift))
                    v = (work.get(t, 0) - c * gc) % p
                    if v:
                        work[t] = v
                    else:
                        work.pop(t, None)
                break
        else:
            remainder[m] = c
            del work[m]
    return f._like(remainder)


def s_polynomial(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    lcm = tuple(max(a, b) for a, b in zip(f.leading_monomial, g.leading_monomial))
    fs = tuple(a - b for a, b in zip(lcm, f.leading_monomial))
    gs = tuple(a - b for a, b in zip(lcm, g.leading_monomial))
    return f.scale(pow(f.leading_coefficient, -1, f.p), fs) - g.scale(pow(g.leading_coefficient, -1, g.p), gs)


@dataclass(frozen=True)
class GroebnerBasis:
    p: int
    variables: tuple[str, ...]
    generators: tuple[MultiPoly, ...]

    @property
    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial for g in self.generators]

    def reduce(self, f: MultiPoly) -> MultiPoly:
        return reduce(f, self.generators)

    def contains(self, f: MultiPoly) -> bool:
        return self.reduce(f).is_zero()

    def satisfies_buchberger_criterion(self) -> bool:
        return all(self.reduce(s_polynomial(f, g)).is_zero()
                   for f, g in itertools.combinations(self.generators, 2))


def buchberger(gens: Sequence[MultiPoly], pair_cap: int = DEFAULT_PAIR_CAP) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens`` (graded lex)."""
    if not gens:
        raise ValueError("need at least one generator to fix variables and characteristic")
    p, variables = gens[0].p, gens[0].variables
    if any(g.p != p or g.variables != variables for g in gens):
        raise ValueError("generators must share characteristic and variables")
    basis = [g.monic() for g in gens if not g.is_zero()]
    pairs = list(itertools.combinations(range(len(basis)), 2))
    processed = 0
    while pairs:
        processed += 1
        if processed > pair_cap:
            raise PairCapExceeded(f"more than {pair_cap} S-pairs processed")
        i, j = pairs.pop(0)
        a, b = basis[i].leading_monomial, basis[j].leading_monomial
        if all(x == 0 or y == 0 for x, y in zip(a, b)):
            continue  # coprime leading monomials: S-polynomial reduces to zero
        r = reduce(s_polynomial(basis[i], basis[j]), basis)
        if not r.is_zero():
            basis.append(r.monic())
            pairs.extend((k, len(basis) - 1) for k in range(len(basis) - 1))

    minimal: list[MultiPoly] = []
    for g in sorted(basis, key=lambda g: grlex_key(g.leading_monomial)):
        if not any(divides(h.leading_monomial, g.leading_monomial) for h in minimal):
            minimal.append(g)
    reduced = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        tail = reduce(g._like(dict(g.terms[1:])), others)
        reduced.append(g._like({g.leading_monomial: 1}) + tail)
    gb = GroebnerBasis(p, variables, tuple(reduced))
    if not gb.satisfies_buchberger_criterion():
        raise SelfCheckFailed("completed basis fails the S-pair criterion")
    return gb


def is_finite_quotient(gb: GroebnerBasis) -> bool:
    """True iff every variable has a pure power among the leading monomials."""
    lms = gb.leading_monomials
    if any(sum(m) == 0 for m in lms):
        return True
    k = len(gb.variables)
    return all(any(m[i] > 0 and sum(m) == m[i] for m in lms) for i in range(k))


def standard_monomials(gb: GroebnerBasis) -> list[Monomial]:
    """Monomials outside the leading ideal, sorted by degree, earlier variables first."""
    if not is_finite_quotient(gb):
        raise InfiniteQuotient("leading ideal misses a pure power of some variable")
    lms = gb.leading_monomials
    if any(sum(m) == 0 for m in lms):
        return []
    k = len(gb.variables)
    bounds = [min(m[i] for m in lms if m[i] > 0 and sum(m) == m[i]) for i in range(k)]
    out = [m for m in itertools.product(*(range(b) for b in bounds))
           if not any(divides(lm, m) for lm in lms)]
    return sorted(out, key=lambda m: (sum(m), tuple(-e for e in m)))


# -- compilation to tables -------------------------------------------------------

def poly_quotient(p: int, variables: Sequence[str], relations: Iterable[str],
                  order_cap: int = DEFAULT_ORDER_CAP, pair_cap: int = DEFAULT_PAIR_CAP) -> TableRing:
    """The ring F_p[variables]/(relations) as a table ring.

    Element index = sum of coefficient_t * p^t over the standard-monomial basis.
    """
    variables = tuple(variables)
    if len(set(variables)) != len(variables):
        raise ValueError("variable names must be distinct")
    gens = [parse_poly(r, variables, p) for r in relations]
    if not gens:
        gens = [MultiPoly.constant(p, variables, 0)]
    gb = buchberger(gens, pair_cap)
    if not is_finite_quotient(gb):
        raise InfiniteQuotient(f"F_{p}[{','.join(variables)}]/({', '.join(relations)}) is infinite")
    basis = standard_monomials(gb)
    k = len(basis)
    order = p**k
    check_order(order, order_cap)
    position = {m: t for t, m in enumerate(basis)}

    def vector(f: MultiPoly) -> np.ndarray:
        v = np.zeros(k, dtype=np.int64)
        for m, c in gb.reduce(f).terms:
            v[position[m]] = c
        return v

    monos = [MultiPoly.monomial(p, variables, m) for m in basis]
    structure = np.zeros((k, k, k), dtype=np.int64)
    for i, j in itertools.product(range(k), repeat=2):
        structure[i, j] = vector(monos[i] * monos[j])
    # normal form is multiplicative on the basis: NF(NF(b_i b_j) b_l) = NF(b_i b_j b_l)
    for i, j, l in itertools.product(range(k), repeat=3):
        lhs = (structure[i, j] @ structure[:, l]) % p
        if not np.array_equal(lhs, vector(monos[i] * monos[j] * monos[l])):
            raise SelfCheckFailed("normal form is not multiplicative on the standard basis")

    weights = p ** np.arange(k, dtype=np.int64)
    digits = (np.arange(order)[:, None] // weights[None, :]) % p
    add = np.empty((order, order), dtype=np.int64)
    mul = np.empty((order, order), dtype=np.int64)
    for a in range(order):
        add[a] = ((digits[a] + digits) % p) @ weights
        times_a = np.tensordot(digits[a], structure, axes=1) % p  # row j: a * b_j
        mul[a] = ((digits @ times_a) % p) @ weights

    def label(v) -> str:
        f = MultiPoly.from_dict(p, variables, {basis[t]: int(c) for t, c in enumerate(v)})
        return f.format(sep="+")

    R = TableRing(
        add=add, mul=mul, zero=0, one=int(vector(MultiPoly.constant(p, variables, 1)) @ weights) if k else 0,
        labels=[label(digits[a]) for a in range(order)],
        symbols={v: int(vector(_PolyAlgebra(p, variables).var(v)) @ weights) for v in variables},
    )
    R._cache["groebner_basis"] = gb
    return validated(R)
