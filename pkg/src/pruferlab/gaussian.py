"""Bounded sweep of the content formula c(fg) = c(f)c(g) over polynomials of degree <= D.

The sweep runs on each local factor separately; contents split across the
factors, so the ring passes at degree D iff every factor does. Within a
factor three reductions keep the sweep exhaustive but small:

* T-shift: c(T^k f · g) = c(fg), so only polynomials with nonzero constant
  term are swept;
* unit scaling: (f, g) and (uf, vg) have the same contents for units u, v;
* substitution T -> wT for a unit w, applied to both polynomials at once.

f runs over orbit representatives under scaling and substitution, g over
representatives under scaling alone. Representatives are the least element of
their orbit for the key (f_0, f_1, ..., f_D) read lexicographically, and the
sweep visits pairs by degree, then f, then g, so the first failure found is
the least witness in that order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .decomposition import local_decomposition
from .errors import BudgetExceeded, SelfCheckFailed
from .ideals import Ideal, all_ideals, ideal_sum, principal_elements, product_ideal
from .polynomials import Polynomial, content, poly_mul
from .ring import TableRing, require_nonzero, unit_mask

DEFAULT_BUDGET = 50_000_000

_MEMO: dict[tuple[str, int], tuple] = {}


@dataclass(frozen=True)
class GaussianWitness:
    f: Polynomial
    g: Polynomial
    content_fg: Ideal
    content_product: Ideal

    def to_json(self) -> dict:
        return {
            "f": self.f.format(),
            "g": self.g.format(),
            "c(fg)": self.content_fg.describe(),
            "c(f)c(g)": self.content_product.describe(),
            "size c(fg)": len(self.content_fg),
            "size c(f)c(g)": len(self.content_product),
        }


@dataclass(frozen=True)
class GaussianVerdict:
    degree_bound: int
    witness: GaussianWitness | None
    pairs_checked: int

    @property
    def refuted(self) -> bool:
        return self.witness is not None

    def __str__(self):
        return "refuted" if self.refuted else f"holds-up-to-{self.degree_bound}"


class _IdealTables:
    def __init__(self, L: TableRing):
        ideals = all_ideals(L)
        ident = {I.elements: k for k, I in enumerate(ideals)}
        self.principal = np.array([ident[principal_elements(L, a)] for a in range(L.order)])
        m = len(ideals)
        self.sum = np.empty((m, m), dtype=np.int64)
        self.product = np.empty((m, m), dtype=np.int64)
        for i in range(m):
            for j in range(i, m):
                self.sum[i, j] = self.sum[j, i] = ident[ideal_sum(ideals[i], ideals[j]).elements]
                self.product[i, j] = self.product[j, i] = ident[product_ideal(ideals[i], ideals[j]).elements]

    def content(self, columns: np.ndarray) -> np.ndarray:
        """Content ideal ids for a batch of coefficient rows."""
        out = self.principal[columns[:, 0]]
        for k in range(1, columns.shape[1]):
            out = self.sum[out, self.principal[columns[:, k]]]
        return out


def _representatives(L: TableRing, D: int, substitute: bool) -> np.ndarray:
    """Orbit representatives of polynomials of degree <= D with nonzero constant term."""
    q = L.order
    width = D + 1
    weights = q ** np.arange(D, -1, -1, dtype=np.int64)
    units = np.flatnonzero(unit_mask(L))
    if substitute:
        powers = np.empty((len(units), width), dtype=np.int64)
        powers[:, 0] = L.one
        for i in range(1, width):
            powers[:, i] = L.mul[powers[:, i - 1], units]
        multipliers = L.mul[units[:, None, None], powers[None, :, :]].reshape(-1, width)
    else:
        multipliers = np.repeat(units[:, None], width, axis=1)
    multipliers = np.unique(multipliers, axis=0)

    total = q**width
    visited = np.zeros(total, dtype=bool)
    reps = []
    for key in range(total):
        if visited[key]:
            continue
        coeffs = (key // weights) % q
        if coeffs[0] == L.zero:
            continue
        reps.append(coeffs)
        visited[L.mul[multipliers, coeffs[None, :]] @ weights] = True
    return np.array(reps, dtype=np.int64).reshape(-1, width)


def _degrees(polys: np.ndarray, zero: int) -> np.ndarray:
    nonzero = polys != zero
    return polys.shape[1] - 1 - np.argmax(nonzero[:, ::-1], axis=1)


def sweep_local(L: TableRing, D: int, budget: int = DEFAULT_BUDGET) -> tuple:
    """Sweep one ring; returns (degree, f_coeffs, g_coeffs, pairs) with degree None when
    no failure exists up to D. Results are memoized on the ring's table digest."""
    key = (L.digest, D)
    if key in _MEMO:
        return _MEMO[key]
    tables = _IdealTables(L)
    f_all = _representatives(L, D, substitute=True)
    g_all = _representatives(L, D, substitute=False)
    f_deg = _degrees(f_all, L.zero)
    g_deg = _degrees(g_all, L.zero)
    pairs = 0
    for d in range(1, D + 1):
        fs = f_all[f_deg <= d][:, : d + 1]
        fd = f_deg[f_deg <= d]
        gs = g_all[g_deg <= d][:, : d + 1]
        gd = g_deg[g_deg <= d]
        g_content = tables.content(gs)
        top = gd == d
        found = None
        for f, deg in zip(fs, fd):
            sel = slice(None) if deg == d else top
            block = gs[sel]
            if block.shape[0] == 0:
                continue
            pairs += block.shape[0]
            if pairs > budget:
                raise BudgetExceeded(f"content sweep exceeded {budget} pairs at degree {d}", d - 1)
            prod = np.full((block.shape[0], 2 * d + 1), L.zero, dtype=np.int64)
            for i, a in enumerate(f):
                if a == L.zero:
                    continue
                for j in range(d + 1):
                    prod[:, i + j] = L.add[prod[:, i + j], L.mul[a, block[:, j]]]
            f_content = tables.content(f[None, :])[0]
            bad = np.flatnonzero(tables.content(prod) != tables.product[f_content, g_content[sel]])
            if bad.size:
                found = (d, tuple(f.tolist()), tuple(block[bad[0]].tolist()), pairs)
                break
        if found is not None:
            _MEMO[key] = found
            return found
    result = (None, None, None, pairs)
    _MEMO[key] = result
    return result


def content_splits(R: TableRing, f: Polynomial) -> bool:
    """c_R(f) is the direct sum of the contents of the components of f."""
    dec = local_decomposition(R)
    pieces = []
    for factor in dec.factors:
        component = Polynomial(factor.ring, tuple(factor.projection(c) for c in f.coeffs))
        pieces.append(factor.inclusion[list(content(component).sorted)])
    els = pieces[0]
    for other in pieces[1:]:
        els = R.add[np.ix_(els, other)].ravel()
    return set(np.asarray(els).tolist()) == content(f).elements


def is_gaussian_bounded(R: TableRing, D: int = 2, budget: int = DEFAULT_BUDGET) -> GaussianVerdict:
    """Refutation with a witness pair, or "holds up to degree D"."""
    require_nonzero(R)
    if D < 1:
        raise ValueError("degree bound must be at least 1")
    dec = local_decomposition(R)
    best = None
    pairs = 0
    for factor in dec.factors:
        degree, f, g, n = sweep_local(factor.ring, D, budget)
        pairs += n
        if degree is not None and (best is None or degree < best[0]):
            best = (degree, factor, f, g)
    if best is None:
        return GaussianVerdict(D, None, pairs)
    _, factor, f, g = best
    fR = Polynomial(R, tuple(int(factor.inclusion[c]) for c in f))
    gR = Polynomial(R, tuple(int(factor.inclusion[c]) for c in g))
    cfg = content(poly_mul(fR, gR))
    cprod = product_ideal(content(fR), content(gR))
    if not cfg.issubset(cprod) or cfg == cprod:
        raise SelfCheckFailed("content witness does not replay in the full ring")
    if not (content_splits(R, fR) and content_splits(R, gR)):
        raise SelfCheckFailed("content does not split across local factors")
    return GaussianVerdict(D, GaussianWitness(fR, gR, cfg, cprod), pairs)
