from __future__ import annotations

import pytest

from oracles import closure, divisors, ideals_by_subsets

from pruferlab.constructions import trivial_extension
from pruferlab.errors import NotAnIdeal, RingMismatch
from pruferlab.ideals import (
    all_ideals,
    all_ideals_by_closure,
    annihilator,
    as_ideal,
    colon,
    fractional_inverse,
    ideal_generated,
    ideal_sum,
    intersect,
    is_invertible,
    is_principal,
    is_regular_ideal,
    maximal_ideals,
    product_ideal,
    unit_ideal,
    zero_ideal,
)
from pruferlab.presentation import poly_quotient
from pruferlab.ring import direct_product, zmod

F2XY_M2 = ["x^2", "x*y", "y^2"]


def small_rings():
    F2 = zmod(2)
    return [
        zmod(2), zmod(4), zmod(6), zmod(8),
        poly_quotient(2, ["x"], ["x^2"]),
        poly_quotient(2, ["x", "y"], F2XY_M2),
        poly_quotient(2, ["a"], ["a^2+a+1"]),
        direct_product([zmod(2), zmod(2)]),
        direct_product([zmod(2), zmod(4)]),
        trivial_extension(F2, ideal_generated(F2, []), 2),
    ]


@pytest.mark.parametrize("R", small_rings(), ids=repr)
def test_lattice_matches_subset_enumeration(R):
    expected = ideals_by_subsets(R.add.tolist(), R.mul.tolist(), R.zero)
    assert {I.elements for I in all_ideals(R)} == expected
    assert {I.elements for I in all_ideals_by_closure(R)} == expected


@pytest.mark.parametrize("R", small_rings(), ids=repr)
def test_generated_ideals_match_worklist_closure(R):
    add, mul = R.add.tolist(), R.mul.tolist()
    for a in range(R.order):
        for b in range(a, R.order):
            assert ideal_generated(R, [a, b]).elements == closure(add, mul, [a, b], R.zero)


@pytest.mark.parametrize("n", [12, 30, 36, 60])
def test_cyclic_rings_have_one_ideal_per_divisor(n):
    assert len(all_ideals(zmod(n))) == len(divisors(n))


def test_generation_examples():
    R = zmod(12)
    assert ideal_generated(R, []).elements == {0}
    assert ideal_generated(R, [1]).is_whole()
    assert ideal_generated(R, [4]).sorted == (0, 4, 8)


def test_lattice_examples():
    assert len(all_ideals(zmod(7))) == 2
    assert [I.sorted for I in all_ideals(zmod(4))] == [(0,), (0, 2), (0, 1, 2, 3)]
    R = poly_quotient(2, ["x", "y"], F2XY_M2)
    assert [I.describe() for I in all_ideals(R)] == ["(0)", "(x)", "(y)", "(x+y)", "(x, y)", "(1)"]


def test_sorted_by_size_then_elements():
    keys = [I.key for I in all_ideals(zmod(60))]
    assert keys == sorted(keys)


def test_arithmetic_examples():
    R = zmod(12)
    I, J = ideal_generated(R, [4]), ideal_generated(R, [6])
    assert ideal_sum(I, zero_ideal(R)) == I
    assert product_ideal(I, J).elements == {0}
    assert intersect(I, J).elements == {0}
    assert ideal_sum(I, J).sorted == (0, 2, 4, 6, 8, 10)
    S = poly_quotient(2, ["x", "y"], ["x^2", "y^2"])
    m = ideal_generated(S, [S.symbols["x"], S.symbols["y"]])
    assert product_ideal(m, m) == ideal_generated(S, [S.element("x*y")])


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        ideal_sum(unit_ideal(zmod(4)), unit_ideal(zmod(4)))


def test_as_ideal_validates():
    R = zmod(6)
    assert as_ideal(R, [0, 2, 4]).generators == (2,)
    with pytest.raises(NotAnIdeal):
        as_ideal(R, [0, 1])
    with pytest.raises(NotAnIdeal):
        as_ideal(R, [2, 4])


def test_annihilator_and_colon():
    R = zmod(4)
    assert annihilator(unit_ideal(R)).elements == {0}
    assert annihilator(zero_ideal(R)).is_whole()
    assert annihilator(ideal_generated(R, [2])).sorted == (0, 2)
    R = zmod(12)
    assert colon(ideal_generated(R, [4]), ideal_generated(R, [2])).sorted == (0, 2, 4, 6, 8, 10)


def test_regular_and_invertible():
    R = zmod(4)
    two = ideal_generated(R, [2])
    assert is_regular_ideal(unit_ideal(R)) and not is_regular_ideal(zero_ideal(R))
    assert not is_regular_ideal(two)
    assert is_invertible(unit_ideal(R)) and not is_invertible(two)
    T, inverse = fractional_inverse(two)
    assert T is R and inverse == [0, 1, 2, 3]


def test_principal():
    assert is_principal(zero_ideal(zmod(4))) == 0
    assert is_principal(ideal_generated(zmod(4), [2])) == 2
    R = poly_quotient(2, ["x", "y"], F2XY_M2)
    assert is_principal(ideal_generated(R, [R.symbols["x"], R.symbols["y"]])) is None


def test_maximal_ideals():
    assert [M.sorted for M in maximal_ideals(zmod(7))] == [(0,)]
    assert sorted(M.sorted for M in maximal_ideals(zmod(6))) == [(0, 2, 4), (0, 3)]
    assert [M.sorted for M in maximal_ideals(zmod(4))] == [(0, 2)]


@pytest.mark.parametrize("R", small_rings(), ids=repr)
def test_regular_means_whole_at_finite_scale(R):
    for I in all_ideals(R):
        assert is_regular_ideal(I) == I.is_whole() == is_invertible(I)
