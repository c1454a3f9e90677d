from fractions import Fraction
from itertools import product

import pytest

from sigmadelta.algebra import LaurentPoly, Matrix
from sigmadelta.chebyshev import tower_solution
from sigmadelta.errors import InvalidSpecialization, NotInG
from sigmadelta.galois import (
    CATALOG,
    FULL_G_EQUATIONS,
    D,
    N,
    Factorization,
    NotDecomposable,
    QuotientRing,
    alpha_of,
    check_product_equal,
    chebyshev_full_group,
    diag_torus,
    diag_torus_mu,
    dihedral_mu,
    full_group,
    membership,
    parameter_ring,
    product_decompose,
    root_of_unity_order,
    shape_of,
    stab_delta,
    stab_sigma,
    trivial_group,
    verify_pv_relations,
    verify_sigma_stability,
)
from sigmadelta.systems import NONRATIONAL


def all_catalog_groups():
    return [full_group(), diag_torus(), diag_torus_mu(4), dihedral_mu(3), trivial_group()]


# -- the oracle for orders of alpha ------------------------------------------------------

def brute_order(c1, n_max=12):
    alpha = alpha_of(c1)
    power = alpha
    for n in range(1, n_max + 1):
        if power == 1:
            return n
        power = power * alpha
    return None


@pytest.mark.parametrize(
    "c1", [Fraction(k, 4) for k in range(-12, 13)] + [Fraction(1, 3), Fraction(5, 3), Fraction(-7, 5)]
)
def test_root_of_unity_order_matches_oracle(c1):
    if c1 * c1 == 1:
        assert root_of_unity_order(c1) == (1 if c1 == 1 else 2)
        return
    assert root_of_unity_order(c1) == brute_order(c1)


def test_root_of_unity_examples():
    assert root_of_unity_order(Fraction(1, 2)) == 6
    assert root_of_unity_order(0) == 4
    assert root_of_unity_order(Fraction(-1, 2)) == 3
    assert root_of_unity_order(2) is None
    assert root_of_unity_order(-1) == 2
    # alpha = 2 + sqrt 3 is a unit of norm 1 larger than 1, so no power returns to 1
    alpha = alpha_of(2)
    assert alpha * alpha.conj() == 1 and alpha.a > 1


def test_alpha_is_a_root():
    for c1 in (2, 0, Fraction(1, 2), Fraction(5, 4), 3):
        a = alpha_of(c1)
        assert a * a - 2 * Fraction(c1) * a + 1 == 0


# -- groups ----------------------------------------------------------------------------------

def test_full_group_membership():
    G = chebyshev_full_group()
    assert membership(D(Fraction(3)), G)
    assert membership(Matrix([[Fraction(3), 0], [0, Fraction(1, 3)]]), G)
    assert not membership(Matrix([[1, 1], [0, 1]]), G)
    assert membership(N(Fraction(5)), G)
    assert not membership(Matrix.identity(3), G)
    assert not membership(Matrix([[0, 0], [0, 0]]), G)


def test_symbolic_membership():
    xi = parameter_ring()
    assert membership(D(xi), diag_torus())
    assert not membership(N(xi), diag_torus())
    assert not membership(N(Fraction(5)), dihedral_mu(3))
    assert membership(N(parameter_ring(3)), dihedral_mu(3))
    assert not membership(D(parameter_ring(6)), diag_torus_mu(3))


@pytest.mark.parametrize("tag", sorted(CATALOG))
def test_identity_in_every_catalog_group(tag):
    ctor = CATALOG[tag]
    groups = [ctor(q) for q in (1, 2, 3, 5)] if tag in ("DiagTorusMuQ", "DihedralMuQ") else [ctor()]
    for H in groups:
        assert membership(Matrix.identity(2), H)
        assert membership(Matrix([[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]), H)


def _two_parameters(q):
    xi = LaurentPoly(("xi", "zeta"), {(1, 0): 1}, moduli=(q, q))
    zeta = LaurentPoly(("xi", "zeta"), {(0, 1): 1}, moduli=(q, q))
    return xi, zeta


@pytest.mark.parametrize("H", all_catalog_groups(), ids=str)
def test_parametric_closure_and_inverse(H):
    xi, zeta = _two_parameters(H.root_order)
    P = H.templates(xi)
    Q = H.templates(zeta)
    for g in P:
        assert membership(g, H)
        assert membership(g, full_group())
        inv = g.inverse()
        assert inv is not None and g * inv == Matrix.identity(2)
        assert membership(inv, H)
        assert shape_of(inv)[0] in H.shapes
        for h in Q:
            prod = g * h
            assert membership(prod, H)
            assert shape_of(prod)[0] in H.shapes


@pytest.mark.parametrize(
    "H", [stab_sigma(2), stab_sigma(0), stab_sigma(Fraction(-1, 2)), stab_delta(Fraction(1, 3)), stab_delta(0)],
    ids=str,
)
def test_stab_groups_inside_G(H):
    for g in H.templates():
        values = dict(zip(("g11", "g12", "g21", "g22"), g.entries()))
        assert all(eq.evaluate(values) == 0 for eq in FULL_G_EQUATIONS)


def test_group_orders():
    assert diag_torus_mu(4).order() == 4
    assert dihedral_mu(3).order() == 6
    assert full_group().order() is None
    with pytest.raises(ValueError):
        diag_torus_mu(0)


# -- specializations ------------------------------------------------------------------------

def test_stab_sigma_classification():
    assert stab_sigma(2).tag == "DiagTorus"
    for c1, q in ((0, 4), (Fraction(1, 2), 6), (Fraction(-1, 2), 3)):
        H = stab_sigma(c1)
        assert (H.tag, H.root_order) == ("DiagTorusMuQ", q)
        assert brute_order(c1) == q
        assert H.order() == q
    with pytest.raises(InvalidSpecialization):
        stab_sigma(1)


def test_stab_delta_classification():
    assert stab_delta(Fraction(1, 3)).name == "DihedralMuQ(3)"
    assert stab_delta(0).name == "DihedralMuQ(1)"
    assert stab_delta(Fraction(-4, 6)).name == "DihedralMuQ(3)"
    G = stab_delta(NONRATIONAL)
    assert G.tag == "FullG" and G.equations == chebyshev_full_group().equations
    assert G.equation_strings() == full_group().equation_strings()
    elems = stab_delta(0)
    assert membership(N(Fraction(1)), elems) and membership(Matrix.identity(2), elems)
    assert elems.order() == 2


# -- relations and stability -----------------------------------------------------------------

def test_pv_relations():
    assert verify_pv_relations()


def test_pv_relations_detect_swapped_entries():
    W = tower_solution()
    swapped = Matrix([[W[0, 1], W[0, 0]], [W[1, 0], W[1, 1]]])
    r = verify_pv_relations(swapped)
    assert not r and r.which == "f3" and r.residual != 0


@pytest.mark.parametrize("c1", [2, 0, 3, Fraction(1, 2), Fraction(5, 2)])
def test_sigma_stability(c1):
    r = verify_sigma_stability(c1)
    assert r, r.detail
    R = QuotientRing(c1)
    lam = r.witness["lambda"]
    assert lam == R.const(1 / R.alpha) * R.u.inverse()


def test_sigma_stability_wrong_generator():
    r = verify_sigma_stability(2, generator=lambda R: R.u - R.const(2 * R.alpha))
    assert not r


def test_sigma_stability_degenerate():
    with pytest.raises(InvalidSpecialization):
        verify_sigma_stability(1)


def test_sign_of_stability_factor():
    # sigma(u - alpha) equals +(1/(alpha u))(u - alpha); the negated factor does not match
    R = QuotientRing(2)
    g = R.u - R.const(R.alpha)
    lam = R.const(1 / R.alpha) * R.u.inverse()
    assert R.sigma(g) == lam * g
    assert R.sigma(g) != -(lam * g)
    assert R.sigma(g) == -R.u.inverse() + R.const(4 - R.alpha)


def test_quotient_relation():
    R = QuotientRing(Fraction(1, 2))
    assert R.u * R.u - R.u * Fraction(1) + R.const(1) == R.const(0)
    assert R.X11 * R.X12 == R.const(1)
    assert R.X21 * R.X22 == R.const(1)


# -- products --------------------------------------------------------------------------------

def test_decompose_examples():
    c = Fraction(7, 3)
    res = product_decompose(N(c), diag_torus(), dihedral_mu(3))
    assert isinstance(res, Factorization)
    assert res.h == D(c) and res.hp == N(Fraction(1))
    g = N(Fraction(2))
    res = product_decompose(g, full_group(), trivial_group())
    assert res.h * res.hp == g and res.hp == Matrix.identity(2)
    res = product_decompose(D(Fraction(2)), diag_torus_mu(2), dihedral_mu(2))
    assert isinstance(res, NotDecomposable)
    with pytest.raises(NotInG):
        product_decompose(Matrix([[1, 1], [0, 1]]), full_group(), trivial_group())


def test_negative_control_brute_force():
    # every element of mu_2-torus times every element of the order-4 dihedral group
    H = [D(Fraction(a)) for a in (1, -1)]
    Hp = [f(Fraction(b)) for f in (D, N) for b in (1, -1)]
    products = [h * hp for h, hp in product(H, Hp)]
    assert len(products) == 8
    assert D(Fraction(2)) not in products


def test_check_product_examples():
    assert check_product_equal(stab_sigma(2), stab_delta(Fraction(1, 3)))
    assert check_product_equal(full_group(), trivial_group())
    r = check_product_equal(diag_torus_mu(2), dihedral_mu(2))
    assert not r
    assert r.witness == D(Fraction(2))
    assert check_product_equal(stab_sigma(2), stab_delta(NONRATIONAL))


@pytest.mark.parametrize("c1", [2, 3, Fraction(5, 2)])
@pytest.mark.parametrize("c2", [0, Fraction(1, 3), Fraction(1, 2), Fraction(7, 5)])
def test_product_sweep(c1, c2):
    r = check_product_equal(stab_sigma(c1), stab_delta(c2))
    assert r
    for g, h, hp in r.witness:
        assert h * hp == g


def test_finite_stab_sigma_does_not_cover():
    assert not check_product_equal(stab_sigma(0), stab_delta(Fraction(1, 3)))
