from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sigmadelta.algebra import ETA, S, T, X, Matrix, QuadExt, RatFunc, tower
from sigmadelta.algebra.tower import DISCRIMINANT
from sigmadelta.operators import (
    IDENTITY,
    ThetaWord,
    apply_delta,
    apply_sigma,
    apply_sigma_inverse,
    apply_theta,
    enumerate_theta,
)
from strategies import quads, ratfuncs, tower_elems

elements = st.one_of(ratfuncs(), quads(), tower_elems(max_support=2))


def test_sigma_examples():
    assert apply_sigma(X * X + T) == (X + 1) * (X + 1) + T
    assert apply_sigma(ETA) == tower(T + S) * ETA
    assert apply_sigma(RatFunc.const(5)) == 5
    assert apply_sigma(Fraction(5)) == 5
    assert apply_sigma_inverse(ETA) == tower(T - S) * ETA


def test_delta_examples():
    assert apply_delta(T ** 3) == 3 * T * T
    assert apply_delta(S) == QuadExt(T, 0, DISCRIMINANT) / S
    assert apply_delta(ETA) == tower((X - 1) / S) * ETA
    assert apply_delta(X) == 0


def test_theta_examples():
    assert apply_theta(ThetaWord(1, 1), X * T) == X + 1
    f = (X + T) / (X - T * T)
    assert apply_theta(IDENTITY, f) == f
    assert apply_theta(ThetaWord(2, 0), 1 / X) == 1 / (X + 2)


def test_theta_word_validation():
    with pytest.raises(ValueError):
        ThetaWord(-1, 0)
    assert ThetaWord(2, 3).length == 5
    assert IDENTITY.is_identity()


def test_enumerate_theta():
    assert enumerate_theta(0) == [ThetaWord(0, 0)]
    assert enumerate_theta(1) == [ThetaWord(0, 0), ThetaWord(0, 1), ThetaWord(1, 0)]
    for L in range(6):
        words = enumerate_theta(L)
        assert len(words) == (L + 1) * (L + 2) // 2
        assert len(set(words)) == len(words)
        keys = [(w.length, w.sigma_power) for w in words]
        assert keys == sorted(keys)


def test_matrix_entrywise():
    M = Matrix([[X, T], [ETA, 1]])
    assert apply_sigma(M) == Matrix([[X + 1, T], [apply_sigma(ETA), 1]])
    assert apply_delta(M)[0, 1] == 1


@settings(max_examples=200, deadline=None)
@given(elements)
def test_sigma_delta_commute(f):
    assert apply_sigma(apply_delta(f)) == apply_delta(apply_sigma(f))


@settings(max_examples=200, deadline=None)
@given(elements, elements)
def test_leibniz(f, g):
    assert apply_delta(f * g) == apply_delta(f) * g + f * apply_delta(g)


@settings(max_examples=200, deadline=None)
@given(elements, elements)
def test_sigma_is_ring_morphism(f, g):
    assert apply_sigma(f * g) == apply_sigma(f) * apply_sigma(g)
    assert apply_sigma(f + g) == apply_sigma(f) + apply_sigma(g)


@settings(max_examples=200, deadline=None)
@given(elements)
def test_sigma_inverse(f):
    assert apply_sigma_inverse(apply_sigma(f)) == f
    assert apply_sigma(apply_sigma_inverse(f)) == f


@settings(max_examples=60, deadline=None)
@given(ratfuncs(), st.integers(0, 2), st.integers(0, 2))
def test_theta_order_irrelevant(f, i, j):
    g = f
    for _ in range(j):
        g = apply_delta(g)
    for _ in range(i):
        g = apply_sigma(g)
    assert apply_theta(ThetaWord(i, j), f) == g


def _is_constant(f) -> bool:
    return apply_sigma(f) == f and apply_delta(f) == 0


def test_constants_of_base_field():
    for c in (0, 1, Fraction(-7, 3)):
        assert _is_constant(RatFunc.const(c))
    for f in (X, T, X + T, 1 / (X * T)):
        assert not _is_constant(f)
