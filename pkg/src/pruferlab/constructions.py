"""Derived ring constructions: quotients, trivial extensions, finite localization,
and a bounded isomorphism search."""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    EmptyMultiplicativeSet,
    IsoCapExceeded,
    RingMismatch,
    SelfCheckFailed,
    SpecError,
)
from .ideals import Ideal, as_ideal
from .ring import (
    DEFAULT_ORDER_CAP,
    RingMap,
    TableRing,
    check_order,
    corner_ring,
    idempotents,
    nilpotency_index,
    unit_mask,
    validated,
)

DEFAULT_ISO_CAP = 64


def quotient(R: TableRing, I: Ideal | Iterable[int]) -> tuple[TableRing, RingMap]:
    """R/I with the canonical surjection. Cosets are labelled by their least element."""
    if not isinstance(I, Ideal):
        I = as_ideal(R, I)
    if I.ring is not R:
        raise RingMismatch("ideal belongs to a different ring")
    coset_min = R.add[:, I.array].min(axis=1).astype(np.int64)
    reps = np.unique(coset_min)
    position = np.full(R.order, -1, dtype=np.int64)
    position[reps] = np.arange(len(reps))
    coset = position[coset_min]
    sub = np.ix_(reps, reps)

    def reader(literal):
        return int(coset[R.element(literal)])

    Q = TableRing(
        add=coset[R.add[sub]],
        mul=coset[R.mul[sub]],
        zero=int(coset[R.zero]),
        one=int(coset[R.one]),
        labels=[R.label(int(r)) for r in reps],
        symbols={name: int(coset[x]) for name, x in R.symbols.items()},
        reader=reader,
    )
    validated(Q)
    pi = RingMap(R, Q, coset).check()
    if sorted(pi.kernel()) != list(I.sorted) or Q.order * len(I) != R.order:
        raise SelfCheckFailed("quotient map does not have the requested kernel")
    return Q, pi


def trivial_extension(A: TableRing, I: Ideal | Iterable[int], rank: int,
                      order_cap: int = DEFAULT_ORDER_CAP) -> TableRing:
    """The idealization A ∝ E with E = (A/I)^rank and (a,e)(b,f) = (ab, af + be).

    Elements are indexed as a * m^rank + enc(e) where m = |A/I| and the first
    module coordinate is most significant.
    """
    if rank < 1:
        raise ValueError("rank must be at least 1")
    Q, pi = quotient(A, I)
    m, n = Q.order, A.order
    width = m ** rank
    size = n * width
    check_order(size, order_cap)
    idx = np.arange(size, dtype=np.int64)
    a = idx // width
    coords = [(idx // m ** (rank - 1 - k)) % m for k in range(rank)]
    pa = pi.image[a]

    add = A.add[a[:, None], a[None, :]].astype(np.int64) * width
    mul = A.mul[a[:, None], a[None, :]].astype(np.int64) * width
    for k, e in enumerate(coords):
        scale = m ** (rank - 1 - k)
        add += Q.add[e[:, None], e[None, :]].astype(np.int64) * scale
        cross = Q.add[Q.mul[pa[:, None], e[None, :]], Q.mul[pa[None, :], e[:, None]]]
        mul += cross.astype(np.int64) * scale

    labels = []
    for x in range(size):
        module = ",".join(Q.label(int(c[x])) for c in coords)
        labels.append(f"({A.label(int(a[x]))};{module})")

    def reader(literal):
        if not isinstance(literal, dict) or set(literal) - {"base", "module"}:
            raise SpecError('trivial-extension literal must be {"base": ..., "module": [...]}')
        base = A.element(literal.get("base", 0))
        module = literal.get("module", [0] * rank)
        if len(module) != rank:
            raise SpecError(f"module part needs {rank} coordinates")
        enc = sum(Q.element(v) * m ** (rank - 1 - k) for k, v in enumerate(module))
        return base * width + enc

    R = TableRing(
        add=add, mul=mul,
        zero=A.zero * width + Q.zero * sum(m ** k for k in range(rank)),
        one=A.one * width + Q.zero * sum(m ** k for k in range(rank)),
        labels=labels,
        symbols={name: x * width + Q.zero * sum(m ** k for k in range(rank))
                 for name, x in A.symbols.items()},
        reader=reader,
    )
    validated(R)
    R._cache["idealization"] = (A, Q, rank)
    return R


def idealization_projection(R: TableRing) -> RingMap:
    """The surjection (a, e) -> a of a ring built by :func:`trivial_extension`."""
    if "idealization" not in R._cache:
        raise RingMismatch("ring was not built as a trivial extension")
    A, Q, rank = R._cache["idealization"]
    return RingMap(R, A, np.arange(R.order) // Q.order ** rank).check()


def module_part(R: TableRing) -> list[int]:
    """Elements (0, e) of a trivial extension."""
    A, Q, rank = R._cache["idealization"]
    width = Q.order ** rank
    return [A.zero * width + k for k in range(width)]


def idempotent_power(R: TableRing, s: int) -> int:
    x = s
    while R.mul[x, x] != x:
        x = int(R.mul[x, s])
    return x


def localize(R: TableRing, generators: Sequence[int]) -> tuple[TableRing, RingMap]:
    """S^-1 R for S generated by ``generators``, realized as the corner ring eR where e
    is the idempotent power of the product of the generators.

    The canonical map r -> re is checked per call: it is surjective, every
    generator maps to a unit, and its kernel is {r : s^j r = 0 for some j}.
    The result may be the zero ring (when s is nilpotent); callers decide.
    """
    if len(generators) == 0:
        raise EmptyMultiplicativeSet("a multiplicative set needs at least one generator")
    s = R.one
    for g in generators:
        s = int(R.mul[s, g])
    e = idempotent_power(R, s)
    L, proj, _ = corner_ring(R, e)
    validated(L)
    proj.check()
    if not proj.is_surjective():
        raise SelfCheckFailed("localization map is not surjective")
    if not L.is_zero_ring:
        lunits = unit_mask(L)
        for g in generators:
            if not lunits[proj(g)]:
                raise SelfCheckFailed(f"generator {g} does not become a unit")
    killed = np.zeros(R.order, dtype=bool)
    power = s
    for _ in range(R.order + 1):
        killed |= R.mul[power] == R.zero
        power = int(R.mul[power, s])
    if not np.array_equal(killed, proj.image == L.zero):
        raise SelfCheckFailed("localization kernel differs from the S-torsion")
    return L, proj


# -- isomorphism search ----------------------------------------------------------

def element_signature(R: TableRing, x: int) -> tuple:
    return (
        _additive_order(R, x),
        bool(unit_mask(R)[x]),
        bool(R.mul[x, x] == x),
        nilpotency_index(R, x),
        int((R.mul[x] == R.zero).sum()),
        len(np.unique(R.mul[x])),
    )


def _additive_order(R: TableRing, x: int) -> int:
    k, y = 1, x
    while y != R.zero:
        y = int(R.add[y, x])
        k += 1
    return k


def _closure_steps(R: TableRing, known: set[int]) -> list[tuple[int, str, int, int]]:
    """Steps (new, op, a, b) extending ``known`` to its closure under + and *."""
    steps = []
    changed = True
    while changed:
        changed = False
        for a in sorted(known):
            for b in sorted(known):
                for op, table in (("+", R.add), ("*", R.mul)):
                    c = int(table[a, b])
                    if c not in known:
                        known.add(c)
                        steps.append((c, op, a, b))
                        changed = True
    return steps


def are_isomorphic(R1: TableRing, R2: TableRing, iso_cap: int = DEFAULT_ISO_CAP) -> RingMap | None:
    """A ring isomorphism R1 -> R2 found by backtracking on generator images, or None."""
    if R1.order > iso_cap or R2.order > iso_cap:
        raise IsoCapExceeded(f"isomorphism search is capped at order {iso_cap}")
    if R1.order != R2.order or R1.char != R2.char:
        return None
    if len(idempotents(R1)) != len(idempotents(R2)) or \
            int(unit_mask(R1).sum()) != int(unit_mask(R2).sum()):
        return None
    sig1 = [element_signature(R1, x) for x in range(R1.order)]
    sig2 = [element_signature(R2, x) for x in range(R2.order)]
    if Counter(sig1) != Counter(sig2):
        return None

    known = {R1.zero, R1.one}
    base_steps = _closure_steps(R1, known)
    gens: list[int] = []
    stages: list[list] = []
    while len(known) < R1.order:
        g = min(set(range(R1.order)) - known)
        gens.append(g)
        known.add(g)
        stages.append(_closure_steps(R1, known))

    image = np.full(R1.order, -1, dtype=np.int64)
    used = np.zeros(R2.order, dtype=bool)

    def assign(x, y, trail):
        if used[y] or sig1[x] != sig2[y]:
            return False
        image[x] = y
        used[y] = True
        trail.append(x)
        return True

    def run(steps, trail):
        for c, op, a, b in steps:
            table = R2.add if op == "+" else R2.mul
            if not assign(c, int(table[image[a], image[b]]), trail):
                return False
        return True

    def undo(trail):
        for x in trail:
            used[image[x]] = False
            image[x] = -1

    start: list[int] = []
    if not (assign(R1.zero, R2.zero, start) and assign(R1.one, R2.one, start) and run(base_steps, start)):
        return None

    def search(k):
        if k == len(gens):
            candidate = RingMap(R1, R2, image.copy())
            return candidate if candidate.is_homomorphism() else None
        for y in range(R2.order):
            trail: list[int] = []
            if assign(gens[k], y, trail) and run(stages[k], trail):
                found = search(k + 1)
                if found is not None:
                    return found
            undo(trail)
        return None

    return search(0)
