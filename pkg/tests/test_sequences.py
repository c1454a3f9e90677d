from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sigmadelta.algebra import T, X, Matrix
from sigmadelta.chebyshev import chebyshev_A, chebyshev_B, diagonalizer, eigenvalues
from sigmadelta.errors import InvalidSpecialization
from sigmadelta.operators import apply_delta, apply_sigma
from sigmadelta.sequences import (
    GermSeq,
    chebyshev_recurrence,
    chebyshev_sum_formula,
    chebyshev_witness,
    embed_ratfunc,
    fundamental_sequence,
    germ_agreement_start,
    germ_equal,
    verify_delta_solution,
    verify_sigma_solution,
)
from strategies import ratfuncs

I2 = Matrix.identity(2)


def test_embed_examples():
    assert embed_ratfunc(1 / X, 0).prefix(4) == [0, 1, Fraction(1, 2), Fraction(1, 3)]
    assert embed_ratfunc(1 / X, 0).start_index == 1
    assert embed_ratfunc(X, 2).prefix(3) == [2, 3, 4]
    assert embed_ratfunc(T * X, 0).prefix(3) == [0, T, 2 * T]
    assert embed_ratfunc(1 / ((X - 3) * (X + 1)), 0).start_index == 4
    assert embed_ratfunc(1 / (X - T), 0).start_index == 0


def test_germ_examples():
    a = GermSeq(lambda s: 1 if s else 0)
    b = GermSeq(lambda s: 1)
    assert germ_equal(a, b, 4)
    assert germ_agreement_start(a, b, 4) == 1
    ident = GermSeq(lambda s: s)
    assert not germ_equal(ident, GermSeq(lambda s: s + 1), 4)
    assert germ_equal(ident, ident, 1)
    with pytest.raises(ValueError):
        germ_equal(a, b, 0)


def test_start_index_zeroes():
    g = GermSeq(lambda s: s * s, start_index=3)
    assert g.prefix(5) == [0, 0, 0, 9, 16]
    assert g.shift().prefix(3) == [0, 0, 9]
    with pytest.raises(IndexError):
        g[-1]


seqs = st.tuples(st.integers(0, 4), st.integers(-2, 2), st.integers(0, 1)).map(
    lambda p: GermSeq(lambda s, p=p: p[1] * s ** p[2] if s >= p[0] else 7, 0, 6)
)


@settings(max_examples=100, deadline=None)
@given(seqs, seqs, seqs)
def test_germ_equivalence_laws(a, b, c):
    assert germ_equal(a, a)
    assert germ_equal(a, b) == germ_equal(b, a)
    if germ_equal(a, b) and germ_equal(b, c):
        assert germ_equal(a, c)


@settings(max_examples=40, deadline=None)
@given(ratfuncs(), st.integers(-3, 3))
def test_embedding_compatible_with_operators(f, c):
    e = embed_ratfunc(f, c)
    assert germ_equal(e.shift(), embed_ratfunc(apply_sigma(f), c))
    assert germ_equal(e.map(apply_delta), embed_ratfunc(apply_delta(f), c))


def test_chebyshev_fundamental_sequence():
    A, U, d = chebyshev_A(), diagonalizer(), eigenvalues()
    seq = fundamental_sequence(A, 0, U, 10)
    assert len(seq) == 11
    for s, W in enumerate(seq):
        assert W == U * d ** s
    assert verify_sigma_solution(seq, A, 0, 10)
    assert verify_delta_solution(seq, chebyshev_B(), 0, 10)


def test_fundamental_identity():
    seq = fundamental_sequence(I2, Fraction(3, 4), I2, 4)
    assert all(W == I2 for W in seq)
    assert verify_delta_solution(seq, Matrix.zeros(2, 2), 0, 4)


def test_fundamental_telescoping():
    seq = fundamental_sequence(Matrix.diag(X, 1), 1, I2, 3)
    assert seq[3] == Matrix.diag(6, 1)


def test_fundamental_singular():
    with pytest.raises(InvalidSpecialization):
        fundamental_sequence(Matrix.diag(X, 1), -2, I2, 4)
    with pytest.raises(InvalidSpecialization):
        fundamental_sequence(I2, 0, Matrix.zeros(2, 2), 2)


def test_verify_failures():
    A, U = chebyshev_A(), diagonalizer()
    seq = fundamental_sequence(A, 0, U, 5)
    bad = list(seq)
    bad[3] = bad[3] + I2
    r = verify_sigma_solution(bad, A, 0, 5)
    assert not r and r.index == 2
    assert verify_sigma_solution(seq[:1], A, 0, 0)
    r = verify_delta_solution(seq, -chebyshev_B(), 0, 5)
    assert not r and r.index == 0
    with pytest.raises(ValueError):
        verify_sigma_solution(seq, A, 0, 10)


def test_chebyshev_polynomials():
    T_ = chebyshev_recurrence(5)
    assert T_[2] == 2 * T * T - 1
    assert T_[5] == 16 * T ** 5 - 20 * T ** 3 + 5 * T
    for m in range(1, 12):
        assert chebyshev_sum_formula(m) == chebyshev_recurrence(m)[m]


def test_chebyshev_trig_oracle():
    # T_m(cos u) = cos(m u); compare at t = 1/2 where cos(m pi/3) is rational
    values = {0: 1, 1: Fraction(1, 2), 2: Fraction(-1, 2), 3: -1, 4: Fraction(-1, 2), 5: Fraction(1, 2)}
    T_ = chebyshev_recurrence(12)
    for m in range(13):
        assert T_[m].subs({"t": Fraction(1, 2)}) == values[m % 6]


def test_witness():
    rows = chebyshev_witness(10)
    assert [r.m for r in rows] == list(range(1, 11))
    assert all(r.ok for r in rows)
    with pytest.raises(ValueError):
        chebyshev_witness(1)


def test_witness_corrupted_seed():
    rows = chebyshev_witness(4, seeds=(T + 1, 2 * T * T - 1))
    assert not rows[0].sigma_residual.is_zero()
    assert not rows[0].ok
