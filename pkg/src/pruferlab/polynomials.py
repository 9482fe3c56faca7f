"""Dense polynomials in one indeterminate T over a table ring, and their content ideals."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import RingMismatch
from .ideals import Ideal, ideal_generated, product_ideal
from .ring import TableRing


@dataclass(frozen=True, eq=False)
class Polynomial:
    ring: TableRing
    coeffs: tuple[int, ...]  # constant term first, no trailing zeros

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == self.ring.zero:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    def __eq__(self, other):
        return isinstance(other, Polynomial) and other.ring is self.ring and other.coeffs == self.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        return poly_mul(self, other)

    def format(self, var: str = "T") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == self.ring.zero:
                continue
            text = self.ring.label(c)
            power = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if not power:
                parts.append(text)
            elif c == self.ring.one:
                parts.append(power)
            else:
                if "+" in text:
                    text = f"({text})"
                parts.append(f"{text}*{power}")
        return "+".join(parts)

    def __str__(self):
        return self.format()


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    R = f.ring
    if g.ring is not R:
        raise RingMismatch("polynomials over different rings")
    if f.is_zero() or g.is_zero():
        return Polynomial(R, ())
    out = [R.zero] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        for j, b in enumerate(g.coeffs):
            out[i + j] = int(R.add[out[i + j], R.mul[a, b]])
    return Polynomial(R, tuple(out))


def content(f: Polynomial) -> Ideal:
    """The ideal generated by the coefficients of f."""
    return ideal_generated(f.ring, sorted(set(f.coeffs)))


def content_formula_holds(f: Polynomial, g: Polynomial) -> bool:
    """c(fg) = c(f)c(g); the inclusion ⊆ always holds, so compare sizes."""
    return len(content(f * g)) == len(product_ideal(content(f), content(g)))
