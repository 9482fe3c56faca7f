"""Splitting a finite commutative ring into local factors eR via primitive idempotents."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SelfCheckFailed
from .ideals import Ideal, all_ideals_by_closure
from .ring import RingMap, TableRing, corner_ring, primitive_idempotents, require_nonzero, validated


@dataclass(eq=False)
class LocalFactor:
    idempotent: int
    ring: TableRing
    projection: RingMap
    inclusion: np.ndarray  # factor index -> index in the source ring
    maximal_ideal: Ideal  # of the factor ring

    @property
    def residue_prime(self) -> int:
        return smallest_prime_factor(self.ring.char)

    def is_field(self) -> bool:
        return len(self.maximal_ideal) == 1


@dataclass(eq=False)
class LocalDecomposition:
    ring: TableRing
    factors: list[LocalFactor]

    def orders(self) -> list[int]:
        return [f.ring.order for f in self.factors]

    def split(self, x: int) -> tuple[int, ...]:
        return tuple(f.projection(x) for f in self.factors)


def smallest_prime_factor(n: int) -> int:
    k = 2
    while k * k <= n:
        if n % k == 0:
            return k
        k += 1
    return n


def local_decomposition(R: TableRing) -> LocalDecomposition:
    """Primitive orthogonal idempotents, their local corner rings, and the checks that
    the corners are local and that R -> prod eR is bijective.

    Factors are ordered by residue characteristic, then by idempotent index.
    """
    require_nonzero(R)
    if "decomposition" in R._cache:
        return R._cache["decomposition"]
    idems = primitive_idempotents(R)
    total = R.zero
    for i, e in enumerate(idems):
        for f in idems[i + 1:]:
            if R.mul[e, f] != R.zero:
                raise SelfCheckFailed(f"primitive idempotents {e} and {f} are not orthogonal")
        total = int(R.add[total, e])
    if total != R.one:
        raise SelfCheckFailed("primitive idempotents do not sum to one")

    factors = []
    for e in idems:
        C, proj, inclusion = corner_ring(R, e)
        validated(C)
        proj.check()
        proper = [I for I in all_ideals_by_closure(C) if not I.is_whole()]
        maximal = [I for I in proper if not any(I.elements < J.elements for J in proper)]
        if len(maximal) != 1:
            raise SelfCheckFailed(f"corner ring at idempotent {e} is not local")
        factors.append(LocalFactor(e, C, proj, inclusion, maximal[0]))
    factors.sort(key=lambda f: (f.residue_prime, f.idempotent))

    images = np.stack([f.projection.image for f in factors], axis=1)
    if len({tuple(row) for row in images.tolist()}) != R.order or \
            int(np.prod([f.ring.order for f in factors])) != R.order:
        raise SelfCheckFailed("R -> product of local factors is not bijective")
    dec = LocalDecomposition(R, factors)
    R._cache["decomposition"] = dec
    return dec
