from __future__ import annotations

import numpy as np
import pytest

from oracles import monomial_quotient_tables, truncated_tables

from pruferlab.errors import InfiniteQuotient, PolynomialSyntaxError, UnknownVariable
from pruferlab.parsing import parse_expression, tokenize
from pruferlab.presentation import (
    MultiPoly,
    buchberger,
    is_finite_quotient,
    parse_poly,
    poly_quotient,
    standard_monomials,
)


def test_parse_examples():
    assert parse_poly("x^2", ["x", "y"], 2).as_dict() == {(2, 0): 1}
    assert parse_poly("x*y + y*x", ["x", "y"], 2).is_zero()
    assert parse_poly("(x+y)^2", ["x", "y"], 2).as_dict() == {(2, 0): 1, (0, 2): 1}
    assert parse_poly("-x + 5", ["x"], 3).as_dict() == {(1,): 2, (0,): 2}
    assert parse_poly("2*(x - 1)*x", ["x"], 5).as_dict() == {(2,): 2, (1,): 3}


@pytest.mark.parametrize("text,pos", [("x +", 3), ("x ** y", 3), ("(x", 2), ("x y", 2), ("3x", 1), ("x^", 2)])
def test_syntax_errors_carry_positions(text, pos):
    with pytest.raises(PolynomialSyntaxError) as info:
        parse_expression(text)
    assert info.value.position == pos


def test_unknown_variable():
    with pytest.raises(UnknownVariable):
        parse_poly("x + z", ["x", "y"], 2)


def test_tokens_skip_whitespace():
    assert [(t[1], t[2]) for t in tokenize(" x  ^ 2 ")] == [("x", 1), ("^", 4), ("2", 6), ("", 8)]


def test_print_parse_roundtrip():
    f = parse_poly("x^2*y + 2*x*y^2 + y + 1", ["x", "y"], 3)
    assert parse_poly(str(f), ["x", "y"], 3) == f


def test_buchberger_examples():
    x2y2 = [parse_poly(t, ["x", "y"], 2) for t in ("x^2", "y^2")]
    gb = buchberger(x2y2)
    assert set(gb.generators) == set(x2y2)
    assert is_finite_quotient(gb)

    gb = buchberger([parse_poly("x", ["x"], 2)])
    assert [g.as_dict() for g in gb.generators] == [{(1,): 1}]

    gb = buchberger([parse_poly(t, ["x", "y"], 2) for t in ("x^2 - y", "y^2")])
    assert gb.satisfies_buchberger_criterion()
    assert is_finite_quotient(gb)
    pure = {i for m in gb.leading_monomials for i in range(2) if m[i] and sum(m) == m[i]}
    assert pure == {0, 1}

    assert not is_finite_quotient(buchberger([parse_poly("x*y", ["x", "y"], 2)]))


def test_buchberger_generates_the_same_ideal():
    gens = [parse_poly(t, ["x", "y"], 3) for t in ("x^2 - y", "x*y - 1", "y^3")]
    gb = buchberger(gens)
    assert all(gb.contains(g) for g in gens)
    # a reduced basis is unique: completing it again, or the inputs in another order, changes nothing
    assert buchberger(list(gb.generators)).generators == gb.generators
    assert buchberger(gens[::-1]).generators == gb.generators


def test_standard_monomials_order():
    gb = buchberger([parse_poly(t, ["x", "y"], 2) for t in ("x^2", "y^2")])
    assert standard_monomials(gb) == [(0, 0), (1, 0), (0, 1), (1, 1)]


def test_infinite_quotient_rejected():
    with pytest.raises(InfiniteQuotient):
        poly_quotient(2, ["x", "y"], ["x^2"])


@pytest.mark.parametrize("p,n", [(2, 2), (2, 3), (3, 3), (5, 2)])
def test_truncated_polynomial_tables_match_oracle(p, n):
    R = poly_quotient(p, ["x"], [f"x^{n}"])
    add, mul = truncated_tables(p, n)
    assert R.order == p**n
    assert np.array_equal(R.add, add) and np.array_equal(R.mul, mul)


def test_two_variable_staircase_matches_oracle():
    R = poly_quotient(2, ["x", "y"], ["x^2", "y^2"])
    add, mul = monomial_quotient_tables(2, [(0, 0), (1, 0), (0, 1), (1, 1)])
    assert np.array_equal(R.add, add) and np.array_equal(R.mul, mul)
    assert R.symbols == {"x": 2, "y": 4}
    assert R.label(2 + 4) == "x+y" and R.label(8) == "x*y"


def test_relations_need_not_be_a_basis():
    R = poly_quotient(2, ["x", "y"], ["x^2 + y", "y^2"])
    assert R.order == 2**4
    x = R.symbols["x"]
    assert R.power(x, 4) == R.zero and R.power(x, 3) != R.zero


def test_field_extension():
    F4 = poly_quotient(2, ["a"], ["a^2 + a + 1"])
    assert F4.order == 4
    assert all((F4.mul[x] == F4.one).any() for x in range(1, 4))


def test_multipoly_arithmetic():
    f = MultiPoly.from_dict(3, ("x",), {(1,): 1, (0,): 1})
    assert (f * f).as_dict() == {(2,): 1, (1,): 2, (0,): 1}
    assert (f - f).is_zero()
