"""Ideals of a table ring: generation, the full lattice, and ideal arithmetic."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import LatticeCapExceeded, NotAnIdeal, RingMismatch, SelfCheckFailed
from .ring import (
    TableRing,
    corner_ring,
    primitive_idempotents,
    total_quotient_ring,
    unit_mask,
    zero_divisor_mask,
)

DEFAULT_LATTICE_CAP = 2**16


@dataclass(frozen=True, eq=False)
class Ideal:
    ring: TableRing
    elements: frozenset[int]
    generators: tuple[int, ...]

    def __eq__(self, other):
        return isinstance(other, Ideal) and other.ring is self.ring and other.elements == self.elements

    def __hash__(self):
        return hash(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.elements

    def __iter__(self):
        return iter(self.sorted)

    def __repr__(self):
        gens = ", ".join(self.ring.label(g) for g in self.generators)
        return f"Ideal(({gens}), size={len(self)})"

    @cached_property
    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.elements))

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.sorted, dtype=np.int64)

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.ring.order, dtype=bool)
        m[self.array] = True
        return m

    @property
    def key(self):
        """Sort key: cardinality first, then the sorted element list."""
        return (len(self), self.sorted)

    def is_zero(self) -> bool:
        return len(self) == 1

    def is_whole(self) -> bool:
        return len(self) == self.ring.order

    def issubset(self, other: "Ideal") -> bool:
        return self.elements <= other.elements

    def describe(self) -> str:
        gens = [g for g in self.generators if g != self.ring.zero]
        return "(" + ", ".join(self.ring.label(g) for g in gens) + ")" if gens else "(0)"


def _same_ring(*ideals: Ideal) -> TableRing:
    R = ideals[0].ring
    if any(I.ring is not R for I in ideals):
        raise RingMismatch("ideals live in different rings")
    return R


def _join(R: TableRing, members: np.ndarray, extra: Iterable[int]) -> np.ndarray:
    """Additive subgroup generated by a subgroup (bool mask) and further elements."""
    members = members.copy()
    for b in extra:
        if members[b]:
            continue
        base = members.copy()
        current = np.flatnonzero(base)
        x = b
        while not base[x]:
            members[R.add[current, x]] = True
            x = int(R.add[x, b])
    return members


def principal_elements(R: TableRing, a: int) -> frozenset[int]:
    return frozenset(np.unique(R.mul[a]).tolist())


def ideal_generated(R: TableRing, gens: Sequence[int]) -> Ideal:
    """Smallest ideal containing ``gens``: the sum of the principal ideals gR."""
    members = np.zeros(R.order, dtype=bool)
    members[R.zero] = True
    for g in gens:
        if not members[g]:
            members = _join(R, members, np.unique(R.mul[g]).tolist())
    return Ideal(R, frozenset(np.flatnonzero(members).tolist()), tuple(int(g) for g in gens))


def as_ideal(R: TableRing, elements: Iterable[int], generators: Sequence[int] | None = None) -> Ideal:
    """Validate an explicit element set as an ideal."""
    els = np.array(sorted(set(int(x) for x in elements)), dtype=np.int64)
    mask = np.zeros(R.order, dtype=bool)
    mask[els] = True
    if not mask[R.zero]:
        raise NotAnIdeal("set does not contain zero")
    if not mask[R.add[np.ix_(els, els)]].all():
        raise NotAnIdeal("set is not closed under addition")
    if not mask[R.mul[els]].all():
        raise NotAnIdeal("set is not closed under multiplication by ring elements")
    if generators is None:
        generators = minimal_generators(R, els)
    return Ideal(R, frozenset(els.tolist()), tuple(generators))


def minimal_generators(R: TableRing, elements: Sequence[int]) -> tuple[int, ...]:
    """Greedy generator list: repeatedly add the least element not yet covered."""
    target = set(int(x) for x in elements)
    members = np.zeros(R.order, dtype=bool)
    members[R.zero] = True
    gens: list[int] = []
    for x in sorted(target):
        if not members[x]:
            gens.append(x)
            members = _join(R, members, np.unique(R.mul[x]).tolist())
    return tuple(gens)


def zero_ideal(R: TableRing) -> Ideal:
    return Ideal(R, frozenset([R.zero]), ())


def unit_ideal(R: TableRing) -> Ideal:
    return Ideal(R, frozenset(range(R.order)), (R.one,))


# -- the full lattice ------------------------------------------------------------

def _lattice_by_closure(R: TableRing, lattice_cap: int) -> list[Ideal]:
    principal: dict[frozenset, int] = {}
    for a in range(R.order):
        principal.setdefault(principal_elements(R, a), a)
    found: dict[frozenset, tuple[int, ...]] = {els: (a,) for els, a in principal.items()}
    queue = list(found)
    pmasks = [(a, np.unique(R.mul[a]).tolist()) for a in principal.values()]
    i = 0
    while i < len(queue):
        els = queue[i]
        i += 1
        mask = np.zeros(R.order, dtype=bool)
        mask[list(els)] = True
        for a, row in pmasks:
            if a in els:
                continue
            joined = frozenset(np.flatnonzero(_join(R, mask, row)).tolist())
            if joined not in found:
                found[joined] = found[els] + (a,)
                queue.append(joined)
                if len(found) > lattice_cap:
                    raise LatticeCapExceeded(f"more than {lattice_cap} ideals")
    return [Ideal(R, els, gens) for els, gens in found.items()]


def _lattice_from_factors(R: TableRing, idems: list[int], lattice_cap: int) -> list[Ideal]:
    pieces = []
    for e in idems:
        C, _, inclusion = corner_ring(R, e)
        pieces.append([(inclusion[list(J.sorted)], tuple(int(inclusion[g]) for g in J.generators))
                       for J in all_ideals(C, lattice_cap)])
    total = int(np.prod([len(p) for p in pieces]))
    if total > lattice_cap:
        raise LatticeCapExceeded(f"{total} ideals exceed the lattice cap {lattice_cap}")
    out = []
    for combo in itertools.product(*pieces):
        els = combo[0][0]
        for other, _ in combo[1:]:
            els = R.add[np.ix_(els, other)].ravel()
        gens = tuple(g for _, gs in combo for g in gs)
        out.append(Ideal(R, frozenset(np.asarray(els).tolist()), gens))
    return out


def all_ideals(R: TableRing, lattice_cap: int = DEFAULT_LATTICE_CAP) -> list[Ideal]:
    """Every ideal of R, sorted by (cardinality, element list).

    Local rings use the principal-ideal closure directly. A ring with several
    primitive idempotents e_i has ideals exactly the direct sums of ideals of
    the corners e_i R, which is far cheaper than closing over R itself.
    """
    if "ideals" not in R._cache:
        idems = primitive_idempotents(R)
        if len(idems) <= 1:
            lattice = _lattice_by_closure(R, lattice_cap)
        else:
            lattice = _lattice_from_factors(R, idems, lattice_cap)
        R._cache["ideals"] = sorted(lattice, key=lambda I: I.key)
    return R._cache["ideals"]


def all_ideals_by_closure(R: TableRing, lattice_cap: int = DEFAULT_LATTICE_CAP) -> list[Ideal]:
    """The plain principal-ideals-under-sums enumeration, without decomposition."""
    return sorted(_lattice_by_closure(R, lattice_cap), key=lambda I: I.key)


def principal_ideal_sets(R: TableRing) -> frozenset[frozenset[int]]:
    if "principal_sets" not in R._cache:
        R._cache["principal_sets"] = frozenset(principal_elements(R, a) for a in range(R.order))
    return R._cache["principal_sets"]


# -- arithmetic ----------------------------------------------------------------

def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    R = _same_ring(I, J)
    joined = _join(R, I.mask, J.sorted)
    return Ideal(R, frozenset(np.flatnonzero(joined).tolist()), I.generators + J.generators)


def product_ideal(I: Ideal, J: Ideal) -> Ideal:
    R = _same_ring(I, J)
    products = sorted({int(R.mul[a, b]) for a in I.generators for b in J.generators} - {R.zero})
    return ideal_generated(R, products)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    R = _same_ring(I, J)
    els = I.elements & J.elements
    return Ideal(R, els, minimal_generators(R, sorted(els)))


def colon(I: Ideal, J: Ideal) -> Ideal:
    """(I : J) = {r : rJ ⊆ I}."""
    R = _same_ring(I, J)
    gens = list(J.generators) or [R.zero]
    ok = I.mask[R.mul[:, gens]].all(axis=1)
    els = np.flatnonzero(ok).tolist()
    return Ideal(R, frozenset(els), minimal_generators(R, els))


def annihilator(I: Ideal) -> Ideal:
    R = I.ring
    return colon(zero_ideal(R), I)


def is_principal(I: Ideal) -> int | None:
    """Least a in I with aR = I, or None."""
    R = I.ring
    for a in I.sorted:
        if len(np.unique(R.mul[a])) == len(I):
            return a
    return None


def is_regular_ideal(I: Ideal) -> bool:
    return bool((~zero_divisor_mask(I.ring))[I.array].any())


def fractional_inverse(I: Ideal) -> tuple[TableRing, list[int]]:
    """I^-1 = {x in Tot(R) : xI ⊆ R}, as a subset of Tot(R)."""
    R = I.ring
    T, phi = total_quotient_ring(R)
    image_of_R = np.zeros(T.order, dtype=bool)
    image_of_R[phi.image] = True
    gens = [phi(g) for g in I.generators] or [T.zero]
    inside = image_of_R[T.mul[:, gens]].all(axis=1)
    return T, np.flatnonzero(inside).tolist()


def is_invertible(I: Ideal) -> bool:
    """I · I^-1 = R, with I^-1 computed literally inside Tot(R)."""
    R = I.ring
    T, inverse_elements = fractional_inverse(I)
    if len(inverse_elements) != T.order:
        raise SelfCheckFailed("fractional inverse is not all of Tot(R) = R")
    products = {int(T.mul[a, b]) for a in I.generators for b in inverse_elements}
    return len(ideal_generated(T, sorted(products))) == R.order


def maximal_ideals(R: TableRing) -> list[Ideal]:
    """Maximal proper ideals, cross-checked against the idempotents and the unit set."""
    proper = [I for I in all_ideals(R) if not I.is_whole()]
    maximal = [I for I in proper if not any(I is not J and I.elements < J.elements for J in proper)]
    if len(maximal) != len(primitive_idempotents(R)):
        raise SelfCheckFailed("number of maximal ideals differs from number of local factors")
    covered = np.zeros(R.order, dtype=bool)
    for M in maximal:
        covered |= M.mask
    if not np.array_equal(~covered, unit_mask(R)):
        raise SelfCheckFailed("units are not the complement of the union of maximal ideals")
    return maximal
