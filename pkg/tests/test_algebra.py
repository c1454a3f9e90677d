from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from sigmadelta.algebra import (
    ETA,
    S,
    T,
    X,
    Matrix,
    Poly,
    QuadExt,
    RatFunc,
    det_inv_adjugate,
    is_laurent_unit,
    normalize,
    poly_gcd,
    rational_root_find,
    tower,
    tower_arith,
)
from sigmadelta.algebra.tower import DISCRIMINANT
from sigmadelta.errors import DivisionByZero, NotAUnit, ShapeError, ZeroPolynomial
from strategies import nonzero_polys, polys, ratfunc_matrices, ratfuncs, tower_elems
from sympy_bridge import poly_to_sympy, ratfunc_to_sympy

x, t = X, T


def test_normalize_cancels_gcd():
    f = normalize(RatFunc((2 * t * t + 2 * t).num, (2 * t).num))
    assert f.num == (t + 1).num and f.den == 1


def test_normalize_zero():
    f = normalize(RatFunc(0, (t * t - 1).num))
    assert f.is_zero() and f.den == 1


def test_normalize_factor():
    f = RatFunc((x * x - 1).num, (x - 1).num)
    assert f == x + 1 and f.den == 1


def test_zero_denominator():
    with pytest.raises(DivisionByZero):
        RatFunc(x.num, 0)
    with pytest.raises(DivisionByZero):
        x / 0


def test_denominator_is_monic():
    f = RatFunc(x.num, (3 * t * x - 6).num)
    assert f.den.lead()[1] == 1


@settings(max_examples=60, deadline=None)
@given(polys(), nonzero_polys(), nonzero_polys())
def test_normalize_matches_sympy(a, b, c):
    f = RatFunc(a * c, b * c)
    expected = sympy.cancel(poly_to_sympy(a) / poly_to_sympy(b))
    assert sympy.simplify(ratfunc_to_sympy(f) - expected) == 0
    g = sympy.gcd(poly_to_sympy(f.num), poly_to_sympy(f.den))
    assert g.is_number


@settings(max_examples=60, deadline=None)
@given(polys(), nonzero_polys(), polys(), nonzero_polys())
def test_canonical_form(a, b, c, d):
    # a/b and c/d have identical representations whenever a d = b c
    f, g = RatFunc(a, b), RatFunc(c, d)
    if a * d == b * c:
        assert (f.num, f.den) == (g.num, g.den)
    else:
        assert f != g


@settings(max_examples=40, deadline=None)
@given(nonzero_polys(3, 2), nonzero_polys(3, 2))
def test_gcd_matches_sympy(a, b):
    g = poly_gcd(a, b)
    expected = sympy.gcd(poly_to_sympy(a), poly_to_sympy(b))
    ratio = sympy.cancel(poly_to_sympy(g) / expected)
    assert ratio.is_number and ratio != 0


@settings(max_examples=50, deadline=None)
@given(ratfuncs(), ratfuncs(), ratfuncs())
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    if not b.is_zero():
        assert a / b * b == a


def test_rational_roots_examples():
    p = Poly.var(("x",), "x")
    assert sorted(rational_root_find(p * p - 1)) == [-1, 1]
    assert rational_root_find(p * p - 2) == []
    assert sorted(rational_root_find((2 * p - 1) * (p + 3))) == [-3, Fraction(1, 2)]
    assert rational_root_find((p - 2) ** 2 * p) == [0, 2, 2]
    with pytest.raises(ZeroPolynomial):
        rational_root_find(p - p)


@given(st.lists(st.fractions(min_value=-6, max_value=6, max_denominator=5), min_size=1, max_size=4),
       st.integers(1, 3))
def test_rational_roots_recover_constructed_roots(roots, lead):
    p = Poly.var(("x",), "x")
    q = Poly.constant(("x",), lead)
    for r in roots:
        q = q * (p - r)
    assert sorted(rational_root_find(q)) == sorted(roots)


# -- matrices ----------------------------------------------------------------------

def test_det_inv_adjugate_chebyshev_A():
    A = Matrix([[0, 1], [-1, 2 * t]])
    d, inv, adj = det_inv_adjugate(A)
    assert d == 1
    assert inv == Matrix([[2 * t, -1], [1, 0]])
    assert A * inv == Matrix.identity(2)


def test_det_inv_adjugate_identity():
    d, inv, adj = det_inv_adjugate(Matrix.identity(2))
    assert d == 1 and inv == Matrix.identity(2)


def test_det_inv_adjugate_singular():
    M = Matrix([[t, t], [t, t]])
    d, inv, adj = det_inv_adjugate(M)
    assert d == 0 and inv is None
    assert (adj * M).is_zero()


def test_non_square_raises():
    with pytest.raises(ShapeError):
        det_inv_adjugate(Matrix([[1, 2, 3], [4, 5, 6]]))
    with pytest.raises(ShapeError):
        Matrix([[1, 2], [3]])


def test_det_agrees_with_sympy_on_rational_matrices():
    rows = [[Fraction(i * j + 1, i + 2) - (i == j) * 3 for j in range(6)] for i in range(6)]
    ours = Matrix(rows).det()
    theirs = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in r] for r in rows]).det()
    assert sympy.Rational(ours.numerator, ours.denominator) == theirs


@settings(max_examples=100, deadline=None)
@given(ratfunc_matrices())
def test_adjugate_identity(M):
    d, inv, adj = det_inv_adjugate(M)
    n = M.nrows
    assert adj * M == Matrix.identity(n) * d
    assert M * adj == Matrix.identity(n) * d
    if d != 0:
        assert M * inv == Matrix.identity(n)


# -- quadratic extensions and the tower ------------------------------------------------

def test_sqrt_relation():
    assert S * S == DISCRIMINANT
    assert tower_arith(tower(t + S), tower(t - S), "mul") == 1


def test_non_square_discriminant_rejected():
    with pytest.raises(ValueError):
        QuadExt(0, 1, 4)
    with pytest.raises(ValueError):
        QuadExt(0, 1, (t + 1) * (t + 1))


@settings(max_examples=50, deadline=None)
@given(ratfuncs(), ratfuncs())
def test_norm_identity(a, b):
    z = QuadExt(a, b, DISCRIMINANT)
    assert z * z.conj() == a * a - DISCRIMINANT * b * b
    if not z.is_zero():
        assert z * z.inverse() == 1


def test_tower_examples():
    assert ETA * tower_arith(ETA, None, "inv") == 1
    with pytest.raises(NotAUnit):
        tower_arith(ETA + 1, None, "inv")
    assert is_laurent_unit(ETA ** 2 * 3)
    assert not is_laurent_unit(ETA + ETA ** 2)
    assert is_laurent_unit(tower(t + S) * ETA ** -1)


def test_eta_plus_one_has_no_bounded_inverse():
    # solve (eta + 1) * sum_{k=-K}^{K} c_k eta^k = 1 for rational c_k
    for K in range(0, 5):
        cs = sympy.symbols(f"c0:{2 * K + 1}")
        prod = {}
        for i, c in enumerate(cs):
            k = i - K
            for shift in (0, 1):
                prod[k + shift] = prod.get(k + shift, 0) + c
        eqs = [prod.get(k, 0) - (1 if k == 0 else 0) for k in range(-K, K + 2)]
        assert sympy.linsolve(eqs, cs) == sympy.EmptySet


@settings(max_examples=60, deadline=None)
@given(tower_elems(4))
def test_unit_test_matches_inverse(a):
    try:
        inv = tower_arith(a, None, "inv")
    except NotAUnit:
        assert not is_laurent_unit(a)
    else:
        assert is_laurent_unit(a)
        assert a * inv == 1


@settings(max_examples=40, deadline=None)
@given(tower_elems(), tower_elems(), tower_elems())
def test_tower_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
