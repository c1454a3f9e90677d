from fractions import Fraction

import pytest
from hypothesis import given, settings

from sigmadelta.algebra import T, X, RatFunc
from sigmadelta.errors import ExprError
from sigmadelta.expr import parse_expr, parse_rational, parse_ratfunc, tokenize
from strategies import ratfuncs


def test_precedence_and_associativity():
    assert parse_ratfunc("1 + 2*3") == RatFunc.const(7)
    assert parse_ratfunc("8/4/2") == RatFunc.const(1)
    assert parse_ratfunc("2 - 3 - 4") == RatFunc.const(-5)
    assert parse_ratfunc("-t^2") == -(T * T)
    assert parse_ratfunc("(x+1)^2") == (X + 1) * (X + 1)


def test_negative_exponents():
    assert parse_ratfunc("t^-1") == 1 / T
    assert parse_ratfunc("t^(-2)") == 1 / (T * T)
    assert parse_ratfunc("x^0") == RatFunc.const(1)


def test_chebyshev_entries():
    assert parse_ratfunc("(x-1)*t/(1-t^2)") == (X - 1) * T / (1 - T * T)
    assert parse_ratfunc("  2 * t ") == 2 * T


def test_custom_variable_names():
    assert parse_ratfunc("m*u", shift_var="m", diff_var="u") == X * T


@pytest.mark.parametrize("src", ["2t", "2(t+1)", "t +", "(t", "t)", "", "   ", "t ** 2", "y", "t^x", "t % 2"])
def test_rejected(src):
    with pytest.raises(ExprError):
        parse_ratfunc(src)


def test_missing_star_message():
    with pytest.raises(ExprError, match=r"missing '\*'"):
        parse_ratfunc("2t")


def test_cell_is_attached():
    with pytest.raises(ExprError) as info:
        parse_ratfunc("2t", cell=("A", 0, 1))
    assert info.value.cell == ("A", 0, 1)


def test_division_by_zero_literal():
    with pytest.raises(Exception):
        parse_ratfunc("1/(t-t)")


def test_parse_rational():
    assert parse_rational("3") == 3
    assert parse_rational("-1/2") == Fraction(-1, 2)
    assert parse_rational("7/5") == Fraction(7, 5)
    with pytest.raises(ExprError):
        parse_rational("t")


def test_tokenize_positions():
    toks = tokenize("x + 12")
    assert [(k.kind, k.text, k.pos) for k in toks] == [
        ("name", "x", 0), ("op", "+", 2), ("int", "12", 4), ("end", "", 6)
    ]


def test_namespace():
    assert parse_expr("a*a + 1", {"a": Fraction(1, 2)}) == Fraction(5, 4)


@settings(max_examples=60, deadline=None)
@given(ratfuncs())
def test_formatted_output_reparses(f):
    assert parse_ratfunc(f.format()) == f
