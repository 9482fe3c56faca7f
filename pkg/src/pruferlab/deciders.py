"""Deciders for the five Prüfer-like conditions on finite commutative rings.

Over a finite ring every ideal is finitely generated, so each "finitely
generated ideal" quantifier ranges over the whole ideal lattice. Negative
verdicts carry the least witness: smallest ideal by cardinality, ties broken
by the sorted element list.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .decomposition import LocalFactor, local_decomposition
from .errors import SelfCheckFailed
from .gaussian import DEFAULT_BUDGET, GaussianVerdict, is_gaussian_bounded
from .ideals import (
    Ideal,
    all_ideals,
    ideal_generated,
    is_invertible,
    is_principal,
    is_regular_ideal,
    minimal_generators,
    principal_elements,
    principal_ideal_sets,
)
from .presentation import is_prime, poly_quotient
from .ring import (
    TableRing,
    idempotents,
    is_total,
    is_von_neumann_regular,
    nilpotency_index,
    require_nonzero,
)

CONDITIONS = ("semihereditary", "wdim_le_1", "arithmetical", "gaussian", "pruefer")


@dataclass
class Verdict:
    holds: bool
    witness: dict | None = None
    notes: dict = field(default_factory=dict)

    def __bool__(self):
        return self.holds


def _ideal_json(I: Ideal) -> dict:
    return {"ideal": I.describe(), "size": len(I), "elements": list(I.sorted)}


# -- projectivity -----------------------------------------------------------------

def projective_by_idempotent(I: Ideal) -> int | None:
    """An idempotent e with eR = I, or None."""
    R = I.ring
    for e in idempotents(R):
        if principal_elements(R, e) == I.elements:
            return e
    return None


def projective_by_factors(I: Ideal) -> bool:
    """Each local component of I is zero or the whole factor."""
    for factor in local_decomposition(I.ring).factors:
        image = set(factor.projection.image[I.array].tolist())
        if len(image) not in (1, factor.ring.order):
            return False
    return True


def is_projective_ideal(I: Ideal) -> bool:
    """I is projective iff I = eR for an idempotent e.

    Finitely generated projective means locally free, and a free ideal of a
    finite local ring is zero or the whole ring. The local-factor form of the
    same criterion is evaluated alongside and must agree.
    """
    require_nonzero(I.ring)
    by_idempotent = projective_by_idempotent(I) is not None
    if by_idempotent != projective_by_factors(I):
        raise SelfCheckFailed(f"projectivity tests disagree on {I!r}")
    return by_idempotent


def is_semihereditary(R: TableRing) -> Verdict:
    require_nonzero(R)
    for I in all_ideals(R):
        if not is_projective_ideal(I):
            return Verdict(False, _ideal_json(I), {"coherent": True})
    return Verdict(True, None, {"coherent": True})


# -- weak global dimension -------------------------------------------------------

@dataclass
class ResolutionWitness:
    """Multiplication by x and by x^(n-1) on a local ring, with the kernels and images
    that make 0 -> (x^(n-1)) -> R -> (x) -> 0 and 0 -> (x) -> R -> (x^(n-1)) -> 0 exact."""

    ring: TableRing
    n: int
    x: int
    x_top: int
    ideal_x: Ideal
    ideal_top: Ideal
    kernel_u: frozenset
    image_u: frozenset
    kernel_v: frozenset
    image_v: frozenset
    x_projective: bool
    shape: str

    @property
    def first_exact(self) -> bool:
        return self.kernel_u == self.ideal_top.elements and self.image_u == self.ideal_x.elements

    @property
    def second_exact(self) -> bool:
        return self.kernel_v == self.ideal_x.elements and self.image_v == self.ideal_top.elements

    @property
    def verified(self) -> bool:
        return self.first_exact and self.second_exact and not self.x_projective

    def to_json(self) -> dict:
        L = self.ring
        return {
            "shape": self.shape,
            "ring_order": L.order,
            "n": self.n,
            "x": L.label(self.x),
            "x^(n-1)": L.label(self.x_top),
            "ker u": len(self.kernel_u),
            "im u": len(self.image_u),
            "ker v": len(self.kernel_v),
            "im v": len(self.image_v),
            "first_exact": self.first_exact,
            "second_exact": self.second_exact,
            "x_projective": self.x_projective,
        }


def resolution_witness(L: TableRing, x: int) -> ResolutionWitness:
    """Build and check both multiplication sequences for a nilpotent x of index n >= 2."""
    n = nilpotency_index(L, x)
    if n < 2:
        raise ValueError("x must be nilpotent and nonzero")
    top = L.power(x, n - 1)
    u, v = L.mul[:, x], L.mul[:, top]
    shape = "chain ring"
    p = L.char
    if is_prime(p) and p**n == L.order:
        shape = f"F_{p}[x]/(x^{n})"
    return ResolutionWitness(
        ring=L, n=n, x=x, x_top=top,
        ideal_x=ideal_generated(L, [x]),
        ideal_top=ideal_generated(L, [top]),
        kernel_u=frozenset(np.flatnonzero(u == L.zero).tolist()),
        image_u=frozenset(np.unique(u).tolist()),
        kernel_v=frozenset(np.flatnonzero(v == L.zero).tolist()),
        image_v=frozenset(np.unique(v).tolist()),
        x_projective=is_projective_ideal(ideal_generated(L, [x])),
        shape=shape,
    )


def periodic_resolution_witness(p: int, n: int) -> ResolutionWitness:
    """The two exact sequences for R = F_p[x]/(x^n), u(r) = rx and v(r) = rx^(n-1)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    R = poly_quotient(p, ["x"], [f"x^{n}"])
    return resolution_witness(R, R.symbols["x"])


@dataclass
class WdimResult:
    value: str  # "0" or "inf"
    witness: ResolutionWitness | dict | None = None

    @property
    def le_1(self) -> bool:
        return self.value == "0"

    def witness_json(self):
        if isinstance(self.witness, ResolutionWitness):
            return {"resolution": self.witness.to_json()}
        return self.witness


def _chain_factor(factors: list[LocalFactor]) -> tuple[LocalFactor, int] | None:
    for factor in factors:
        if factor.is_field():
            continue
        x = is_principal(factor.maximal_ideal)
        if x is not None:
            return factor, x
    return None


def wdim_class(R: TableRing) -> WdimResult:
    """Weak global dimension of a finite ring, which is either 0 or infinite.

    Over a finite local ring a finitely generated module of finite flat
    dimension is free, so anything beyond a product of fields has infinite
    weak dimension. Class 0 is decided by the von Neumann regularity test and
    checked against "every ideal is projective".
    """
    require_nonzero(R)
    vnr = is_von_neumann_regular(R)
    semi = is_semihereditary(R)
    if vnr != semi.holds:
        raise SelfCheckFailed("von Neumann regularity disagrees with the projective-ideal test")
    if vnr:
        return WdimResult("0")
    chain = _chain_factor(local_decomposition(R).factors)
    if chain is not None:
        factor, x = chain
        witness = resolution_witness(factor.ring, x)
        if not witness.verified:
            raise SelfCheckFailed("resolution witness is not exact")
        return WdimResult("inf", witness)
    return WdimResult("inf", {"non_projective": semi.witness})


# -- arithmetical --------------------------------------------------------------------

def _factor_maximal_preimage(R: TableRing, factor: LocalFactor) -> Ideal:
    inside = factor.maximal_ideal.mask[factor.projection.image]
    els = np.flatnonzero(inside).tolist()
    return Ideal(R, frozenset(els), minimal_generators(R, els))


def is_chain_ring(L: TableRing) -> bool:
    ideals = all_ideals(L)
    return all(I.issubset(J) or J.issubset(I) for I in ideals for J in ideals)


def is_arithmetical(R: TableRing) -> Verdict:
    """Every ideal is principal after localizing at each maximal ideal, where the
    localization at a maximal ideal is the corresponding local factor eR."""
    require_nonzero(R)
    factors = local_decomposition(R).factors
    verdict = Verdict(True)
    for I in all_ideals(R):
        for factor in factors:
            image = frozenset(factor.projection.image[I.array].tolist())
            if image not in principal_ideal_sets(factor.ring):
                witness = _ideal_json(I)
                witness["maximal_ideal"] = _factor_maximal_preimage(R, factor).describe()
                witness["factor_order"] = factor.ring.order
                verdict = Verdict(False, witness)
                break
        if not verdict.holds:
            break
    chains = all(is_chain_ring(f.ring) for f in factors)
    if chains != verdict.holds:
        raise SelfCheckFailed("arithmetical verdict disagrees with the chain-ring criterion")
    return verdict


# -- Prüfer --------------------------------------------------------------------

def two_generated_ideals(R: TableRing) -> list[Ideal]:
    """Ideals of the form aR + bR, located in the lattice as the least ideal containing both."""
    lattice = all_ideals(R)
    masks = np.stack([I.mask for I in lattice])
    principal = [I for I in lattice if I.elements in principal_ideal_sets(R)]
    contains = [masks[:, P.array].all(axis=1) for P in principal]
    found = {}
    for i in range(len(principal)):
        for j in range(i, len(principal)):
            k = int(np.argmax(contains[i] & contains[j]))
            found[k] = lattice[k]
    return [found[k] for k in sorted(found)]


def is_pruefer(R: TableRing) -> Verdict:
    """Every regular ideal is invertible; the two-generated form is evaluated as well
    and must agree."""
    require_nonzero(R)
    regular = [I for I in all_ideals(R) if is_regular_ideal(I)]
    failing = [I for I in regular if not is_invertible(I)]
    two_gen = [I for I in two_generated_ideals(R) if is_regular_ideal(I)]
    two_gen_ok = all(is_invertible(I) for I in two_gen)
    if two_gen_ok != (not failing):
        raise SelfCheckFailed("Prüfer verdict differs between all and two-generated regular ideals")
    notes = {
        "total": is_total(R),
        "regular_ideals": len(regular),
        "two_generated_regular_ideals": len(two_gen),
    }
    if failing:
        return Verdict(False, _ideal_json(failing[0]), notes)
    return Verdict(True, None, notes)


def is_local(R: TableRing) -> bool:
    return len(local_decomposition(R).factors) == 1


def is_noetherian(R: TableRing) -> bool:
    """Finite rings have finitely many ideals; recorded for completeness."""
    return True


# -- classification ----------------------------------------------------------------

@dataclass
class ClassificationReport:
    ring: TableRing
    degree_bound: int
    semihereditary: Verdict
    wdim: WdimResult
    arithmetical: Verdict
    gaussian: GaussianVerdict
    pruefer: Verdict
    total: bool
    local: bool

    @property
    def wdim_le_1(self) -> bool:
        return self.wdim.le_1

    def verdicts(self) -> dict[str, bool]:
        """The five conditions as booleans; Gaussian means "not refuted at the degree bound"."""
        return {
            "semihereditary": self.semihereditary.holds,
            "wdim_le_1": self.wdim_le_1,
            "arithmetical": self.arithmetical.holds,
            "gaussian": not self.gaussian.refuted,
            "pruefer": self.pruefer.holds,
        }

    def chain_violations(self) -> list[str]:
        v = self.verdicts()
        return [f"{a} holds but {b} fails" for a, b in zip(CONDITIONS, CONDITIONS[1:]) if v[a] and not v[b]]

    def to_json(self, description: str | None = None) -> dict:
        ring = {"order": self.ring.order, "char": self.ring.char}
        if description is not None:
            ring = {"description": description, **ring}
        witnesses = {}
        if self.semihereditary.witness:
            witnesses["semihereditary"] = self.semihereditary.witness
        if self.wdim.witness is not None:
            witnesses["wdim_le_1"] = self.wdim.witness_json()
        if self.arithmetical.witness:
            witnesses["arithmetical"] = self.arithmetical.witness
        if self.gaussian.witness is not None:
            witnesses["gaussian"] = self.gaussian.witness.to_json()
        if self.pruefer.witness:
            witnesses["pruefer"] = self.pruefer.witness
        return {
            "ring": ring,
            "verdicts": {
                "semihereditary": self.semihereditary.holds,
                "wdim_le_1": self.wdim_le_1,
                "wdim_class": self.wdim.value,
                "arithmetical": self.arithmetical.holds,
                "gaussian": str(self.gaussian),
                "pruefer": self.pruefer.holds,
                "total": self.total,
                "local": self.local,
            },
            "witnesses": witnesses,
            "degree_bound": self.degree_bound,
        }


def classify(R: TableRing, D: int = 2, budget: int = DEFAULT_BUDGET) -> ClassificationReport:
    require_nonzero(R)
    key = ("classify", D)
    if key not in R._cache:
        R._cache[key] = ClassificationReport(
            ring=R,
            degree_bound=D,
            semihereditary=is_semihereditary(R),
            wdim=wdim_class(R),
            arithmetical=is_arithmetical(R),
            gaussian=is_gaussian_bounded(R, D, budget),
            pruefer=is_pruefer(R),
            total=is_total(R),
            local=is_local(R),
        )
        violations = R._cache[key].chain_violations()
        if violations:
            raise SelfCheckFailed("implication chain broken: " + "; ".join(violations))
    return R._cache[key]

