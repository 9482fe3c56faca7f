"""Independent brute-force oracles. Nothing here calls into the package's algorithms;
only raw tables are read from the rings under test."""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np


def zmod_tables(n: int):
    a = np.arange(n)
    return (a[:, None] + a[None, :]) % n, (a[:, None] * a[None, :]) % n


def axioms_hold(add, mul, zero, one) -> bool:
    """Full O(n^3) scan of the commutative ring axioms."""
    add, mul = np.asarray(add), np.asarray(mul)
    n = add.shape[0]
    idx = np.arange(n)
    if not (np.array_equal(add, add.T) and np.array_equal(mul, mul.T)):
        return False
    if not (np.array_equal(add[zero], idx) and np.array_equal(mul[one], idx)):
        return False
    if not all((add[a] == zero).any() for a in range(n)):
        return False
    for a in range(n):
        if not np.array_equal(add[add[a]], add[a][add]):  # (a+b)+c == a+(b+c)
            return False
        if not np.array_equal(mul[mul[a]], mul[a][mul]):
            return False
        # a(b+c) == ab + ac
        if not np.array_equal(mul[a][add], add[mul[a][:, None], mul[a][None, :]]):
            return False
    return True


def closure(add, mul, gens, zero) -> frozenset:
    """Worklist closure of gens under addition and multiplication by ring elements."""
    n = len(add)
    members = {zero}
    work = list(gens)
    while work:
        x = int(work.pop())
        if x in members:
            continue
        members.add(x)
        for r in range(n):
            work.append(int(mul[r][x]))
        for y in list(members):
            work.append(int(add[x][y]))
    return frozenset(members)


def ideals_by_subsets(add, mul, zero) -> set[frozenset]:
    """All ideals by testing every subset containing zero (order <= 10)."""
    n = len(add)
    others = [x for x in range(n) if x != zero]
    out = set()
    for bits in range(2 ** len(others)):
        s = {zero} | {others[i] for i in range(len(others)) if bits >> i & 1}
        if all(add[a][b] in s for a in s for b in s) and all(mul[r][a] in s for r in range(n) for a in s):
            out.add(frozenset(s))
    return out


def monomial_quotient_tables(p: int, basis: list[tuple[int, ...]]):
    """F_p[x_1..x_k]/(monomials outside the down-set ``basis``) with element index
    sum c_t p^t in the given basis order."""
    k = len(basis)
    pos = {m: t for t, m in enumerate(basis)}
    order = p**k
    digits = [[(a // p**t) % p for t in range(k)] for a in range(order)]

    def encode(v):
        return sum(int(c) * p**t for t, c in enumerate(v))

    add = np.zeros((order, order), dtype=np.int64)
    mul = np.zeros((order, order), dtype=np.int64)
    for a in range(order):
        for b in range(order):
            add[a, b] = encode([(x + y) % p for x, y in zip(digits[a], digits[b])])
            v = [0] * k
            for i, ci in enumerate(digits[a]):
                for j, cj in enumerate(digits[b]):
                    if ci and cj:
                        m = tuple(x + y for x, y in zip(basis[i], basis[j]))
                        if m in pos:
                            v[pos[m]] = (v[pos[m]] + ci * cj) % p
            mul[a, b] = encode(v)
    return add, mul


def truncated_tables(p: int, n: int):
    return monomial_quotient_tables(p, [(e,) for e in range(n)])


def poly_product(add, mul, zero, f, g):
    out = [zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = int(add[out[i + j]][mul[a][b]])
    return out


def gaussian_failures(add, mul, zero, D: int, limit: int | None = None):
    """Every (f, g) with coefficient vectors of length D+1 whose contents violate
    c(fg) = c(f)c(g); unreduced sweep over all pairs."""
    add = [list(map(int, r)) for r in np.asarray(add)]
    mul = [list(map(int, r)) for r in np.asarray(mul)]
    n = len(add)

    @lru_cache(maxsize=None)
    def content(coeffs: frozenset):
        return closure(add, mul, coeffs, zero)

    @lru_cache(maxsize=None)
    def product(I: frozenset, J: frozenset):
        return closure(add, mul, {mul[a][b] for a in I for b in J}, zero)

    polys = list(itertools.product(range(n), repeat=D + 1))
    found = []
    for f in polys:
        cf = content(frozenset(f))
        for g in polys:
            fg = poly_product(add, mul, zero, f, g)
            if content(frozenset(fg)) != product(cf, content(frozenset(g))):
                found.append((f, g))
                if limit is not None and len(found) >= limit:
                    return found
    return found


def is_gaussian_brute(add, mul, zero, D: int) -> bool:
    return not gaussian_failures(add, mul, zero, D, limit=1)


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]
