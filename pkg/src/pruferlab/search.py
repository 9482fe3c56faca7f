"""Search a family of small rings for a boolean combination of properties."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator

from .config import RunConfig
from .deciders import classify
from .errors import ParseError
from .harness import CorpusEntry, load_corpus
from .presentation import is_prime
from .ring import TableRing
from .spec import PolyQuotient, Product, RingSpec, ZMod, build

ATOMS = ("pruefer", "gaussian", "arithmetical", "wdim_le_1", "semihereditary", "total", "local")

_TOKEN = re.compile(r"\s*(?:(?P<word>[A-Za-z_][A-Za-z0-9_]*)|(?P<paren>[()]))")


class PropertySyntaxError(ParseError):
    pass


def _tokens(text: str) -> list[tuple[str, int]]:
    out, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            bad = len(text) - len(text[pos:].lstrip())
            raise PropertySyntaxError(f"unexpected character {text[bad]!r}", bad)
        tok = m.group("word") or m.group("paren")
        out.append((tok, m.start(m.lastgroup)))
        pos = m.end()
    return out


def parse_property(text: str):
    """Grammar: expr := term ("or" term)*, term := factor ("and" factor)*,
    factor := "not" factor | "(" expr ")" | atom."""
    tokens = _tokens(text)
    i = 0

    def peek():
        return tokens[i][0] if i < len(tokens) else None

    def take(expected=None):
        nonlocal i
        if i >= len(tokens):
            raise PropertySyntaxError("unexpected end of expression", len(text))
        tok, pos = tokens[i]
        if expected is not None and tok != expected:
            raise PropertySyntaxError(f"expected {expected!r}, found {tok!r}", pos)
        i += 1
        return tok, pos

    def expr():
        node = term()
        while peek() == "or":
            take()
            node = ("or", node, term())
        return node

    def term():
        node = factor()
        while peek() == "and":
            take()
            node = ("and", node, factor())
        return node

    def factor():
        tok, pos = take()
        if tok == "not":
            return ("not", factor())
        if tok == "(":
            node = expr()
            take(")")
            return node
        if tok in ATOMS:
            return ("atom", tok)
        raise PropertySyntaxError(f"unknown atom {tok!r}; known: {', '.join(ATOMS)}", pos)

    node = expr()
    if i != len(tokens):
        raise PropertySyntaxError(f"unexpected {tokens[i][0]!r}", tokens[i][1])
    return node


def evaluate_property(node, values: dict[str, bool]) -> bool:
    op = node[0]
    if op == "atom":
        return values[node[1]]
    if op == "not":
        return not evaluate_property(node[1], values)
    left, right = evaluate_property(node[1], values), evaluate_property(node[2], values)
    return left and right if op == "and" else left or right


# -- the family ------------------------------------------------------------------

def staircases(p: int, max_order: int, max_vars: int = 3) -> Iterator[PolyQuotient]:
    """F_p[vars]/(monomial ideal) for every finite down-set of monomials in which each
    variable occurs, with p^|down-set| <= max_order."""
    names = ("x", "y", "z")
    k_max = 0
    while p ** (k_max + 1) <= max_order:
        k_max += 1
    for nv in range(1, max_vars + 1):
        for down in _down_sets(nv, k_max):
            if any(all(m[v] == 0 for m in down) for v in range(nv)):
                continue
            yield PolyQuotient(p, names[:nv], tuple(_relations(down, nv, names)))


def _down_sets(nv: int, k_max: int) -> list[frozenset]:
    """All down-sets of N^nv with at most k_max elements, grown one corner at a time."""
    if k_max < 1:
        return []
    origin = frozenset([(0,) * nv])
    found = {origin}
    layer = [origin]
    while layer:
        nxt = []
        for down in layer:
            if len(down) == k_max:
                continue
            for m in down:
                for v in range(nv):
                    up = tuple(e + (w == v) for w, e in enumerate(m))
                    if up in down:
                        continue
                    grown = down | {up}
                    if grown not in found and _is_down_set(grown):
                        found.add(grown)
                        nxt.append(grown)
        layer = nxt
    return sorted(found, key=lambda d: (len(d), sorted(d)))


def _is_down_set(down: frozenset) -> bool:
    for m in down:
        for v in range(len(m)):
            if m[v] and tuple(e - (w == v) for w, e in enumerate(m)) not in down:
                return False
    return True


def _relations(down: frozenset, nv: int, names) -> list[str]:
    """Minimal generators of the monomial ideal complementary to the down-set."""
    border = set()
    for m in down | {tuple([0] * nv)}:
        for v in range(nv):
            up = tuple(e + (w == v) for w, e in enumerate(m))
            if up not in down:
                border.add(up)
    minimal = [b for b in border if not any(c != b and all(ci <= bi for ci, bi in zip(c, b)) for c in border)]
    out = []
    for m in sorted(minimal, key=lambda m: (sum(m), tuple(-e for e in m))):
        factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e]
        out.append("*".join(factors))
    return out


@dataclass(frozen=True)
class Candidate:
    name: str
    spec: RingSpec
    source: str  # corpus, zmod, staircase or product


def family(max_order: int, corpus: list[CorpusEntry] | None = None) -> list[Candidate]:
    out: list[Candidate] = []
    for entry in corpus or []:
        out.append(Candidate(entry.name, entry.spec, "corpus"))
    for n in range(2, max_order + 1):
        out.append(Candidate(f"Z/{n}", ZMod(n), "zmod"))
    for p in (q for q in range(2, max_order + 1) if is_prime(q)):
        for spec in staircases(p, max_order):
            out.append(Candidate(spec.describe(), spec, "staircase"))
    basics = [c for c in out if c.source in ("zmod", "staircase")]
    sizes = {}
    for c in basics:
        sizes[c.name] = _order_of(c.spec)
    for a, b in itertools.combinations_with_replacement(basics, 2):
        if sizes[a.name] * sizes[b.name] <= max_order:
            spec = Product((a.spec, b.spec))
            out.append(Candidate(spec.describe(), spec, "product"))
    return out


def _order_of(spec: RingSpec) -> int:
    if isinstance(spec, ZMod):
        return spec.n
    return len(build(spec).add)


@dataclass
class Match:
    name: str
    source: str
    description: str
    order: int
    values: dict[str, bool]


def search(expression: str, max_order: int, config: RunConfig | None = None,
           corpus: list[CorpusEntry] | None = None) -> list[Match]:
    """Rings of order <= max_order satisfying the expression, sorted by (order, name).

    The ``gaussian`` atom means "no failure up to the configured degree bound".
    """
    config = config or RunConfig()
    node = parse_property(expression)
    matches = []
    seen = set()
    for cand in family(max_order, corpus):
        R = build(cand.spec, config.order_cap, config.pair_cap)
        if R.order > max_order or R.order < 2:
            continue
        key = (R.digest, cand.name)
        if key in seen:
            continue
        seen.add(key)
        report = classify(R, config.degree_bound)
        values = {**report.verdicts(), "total": report.total, "local": report.local}
        if evaluate_property(node, values):
            matches.append(Match(cand.name, cand.source, cand.spec.describe(), R.order, values))
    return sorted(matches, key=lambda m: (m.order, m.source != "corpus", m.name))


def search_default(expression: str, max_order: int, config: RunConfig | None = None,
                   corpus_dir=None) -> list[Match]:
    return search(expression, max_order, config, load_corpus(corpus_dir))


def ring_is(R: TableRing, expression: str, D: int = 2) -> bool:
    report = classify(R, D)
    return evaluate_property(parse_property(expression),
                             {**report.verdicts(), "total": report.total, "local": report.local})

