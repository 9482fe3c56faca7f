from __future__ import annotations

import itertools

import pytest

from pruferlab.harness import load_corpus
from pruferlab.presentation import poly_quotient
from pruferlab.ring import zmod
from pruferlab.search import (
    PropertySyntaxError,
    evaluate_property,
    family,
    parse_property,
    ring_is,
    search,
    staircases,
)


def test_parse_precedence():
    assert parse_property("pruefer or gaussian and not local") == (
        "or", ("atom", "pruefer"), ("and", ("atom", "gaussian"), ("not", ("atom", "local"))))
    assert parse_property("(pruefer or gaussian) and total")[0] == "and"


@pytest.mark.parametrize("text,pos", [("pruefer and", 11), ("noetherian", 0), ("(pruefer", 8),
                                      ("pruefer gaussian", 8), ("pruefer & gaussian", 8)])
def test_syntax_errors(text, pos):
    with pytest.raises(PropertySyntaxError) as info:
        parse_property(text)
    assert info.value.position == pos


def test_evaluate():
    node = parse_property("not (pruefer and gaussian)")
    assert evaluate_property(node, {"pruefer": True, "gaussian": False})
    assert not evaluate_property(node, {"pruefer": True, "gaussian": True})


def brute_down_sets(max_size: int, nv: int = 3) -> set[frozenset]:
    """Down-closed monomial sets of size 2..max_size using exactly the first k variables."""
    monos = [m for m in itertools.product(range(max_size), repeat=nv) if sum(m) < max_size]
    found = set()
    for size in range(2, max_size + 1):
        for subset in itertools.combinations(monos, size):
            s = set(subset)
            closed = all(tuple(e - (i == j) for j, e in enumerate(m)) in s
                         for m in s for i in range(nv) if m[i])
            used = [any(m[i] for m in s) for i in range(nv)]
            if closed and used == sorted(used, reverse=True):
                found.add(frozenset(s))
    return found


def test_staircases_up_to_eight():
    found = sorted(s.describe() for s in staircases(2, 8))
    assert found == ["F_2[x,y]/(x^2, x*y, y^2)", "F_2[x]/(x^2)", "F_2[x]/(x^3)"]
    assert [s.describe() for s in staircases(3, 9)] == ["F_3[x]/(x^2)"]


@pytest.mark.parametrize("p,max_order,k", [(2, 16, 4), (2, 32, 5), (3, 81, 4)])
def test_staircase_count_matches_brute_force(p, max_order, k):
    assert len(list(staircases(p, max_order))) == len(brute_down_sets(k))


def test_family_is_deterministic_and_bounded():
    a = [c.name for c in family(12)]
    assert a == [c.name for c in family(12)]
    assert "Z/12" in a and "Z/2 x Z/2" in a


def test_strictness_hits():
    corpus = load_corpus()
    hits = search("pruefer and not gaussian", 16, corpus=corpus)
    assert hits[0].name == "f2_xy_squares" and hits[0].order == 16
    hits = search("gaussian and not arithmetical", 16, corpus=corpus)
    assert hits[0].name == "f2_xy_m2" and hits[0].order == 8
    names = {m.name for m in search("arithmetical and not wdim_le_1", 16, corpus=corpus)}
    assert {"f2_x2", "z4"} <= names
    assert search("not pruefer", 16, corpus=corpus) == []


def test_ring_is():
    assert ring_is(zmod(4), "arithmetical and not wdim_le_1")
    assert ring_is(poly_quotient(2, ["x", "y"], ["x^2", "y^2"]), "pruefer and not gaussian")
