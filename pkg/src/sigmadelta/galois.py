"""Galois groups of the Chebyshev system as algebraic subgroups of GL2.

Every group here lies in

    G = {D(a) = diag(a, 1/a)} union {N(a) = antidiag(a, 1/a)},

so a catalog group is described by the shapes it allows (D, N or both) and
the parameters it allows (all units, or the q-th roots of unity). Products
follow D(a)D(b) = D(ab), D(a)N(b) = N(ab), N(a)D(b) = N(a/b), N(a)N(b) = D(a/b).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Callable, Optional, Tuple

from .algebra.laurent import LaurentPoly
from .algebra.matrix import Matrix, invert_scalar
from .algebra.poly import Poly
from .algebra.quadext import QuadExt, rational_sqrt
from .chebyshev import chebyshev_A, chebyshev_B, chebyshev_system, tower_solution
from .errors import InvalidSpecialization, NotAUnit, NotInG
from .operators import apply_delta, apply_sigma
from .results import Check, failed, passed
from .systems import NONRATIONAL, shift_orbit_nonvanishing, specialize_t

G_GENS = ("g11", "g12", "g21", "g22")
_g11, _g12, _g21, _g22 = (Poly.var(G_GENS, n) for n in G_GENS)

FULL_G_EQUATIONS = (_g11 * _g12, _g21 * _g22, _g11 * _g22 + _g12 * _g21 - 1)
TORUS_EQUATIONS = (_g12, _g21, _g11 * _g22 - 1)


# -- groups --------------------------------------------------------------------------

@dataclass(frozen=True)
class AlgSubgroup:
    """A subgroup of GL2 cut out by ``equations``; catalog groups also carry shapes and a root order.

    ``shapes`` is a subset of {"D", "N"}; ``root_order`` None means the parameter is any unit.
    """

    tag: str
    equations: Tuple[Poly, ...]
    shapes: Optional[Tuple[str, ...]] = None
    root_order: Optional[int] = None

    @property
    def name(self) -> str:
        if self.tag in ("DiagTorusMuQ", "DihedralMuQ"):
            return f"{self.tag}({self.root_order})"
        return self.tag

    def is_catalog(self) -> bool:
        return self.shapes is not None

    def order(self) -> Optional[int]:
        """Number of elements, or None for a one-parameter group."""
        if self.root_order is None:
            return None
        return len(self.shapes) * self.root_order

    def equation_strings(self):
        return [e.format() for e in self.equations]

    def templates(self, param=None):
        """The parametric elements, in a Laurent ring of xi subject to the root constraint."""
        xi = param if param is not None else parameter_ring(self.root_order)
        return [template(s, xi) for s in self.shapes]

    def __str__(self):
        return self.name


def full_group() -> AlgSubgroup:
    return AlgSubgroup("FullG", FULL_G_EQUATIONS, ("D", "N"), None)


def diag_torus() -> AlgSubgroup:
    return AlgSubgroup("DiagTorus", TORUS_EQUATIONS, ("D",), None)


def diag_torus_mu(q: int) -> AlgSubgroup:
    _check_order(q)
    return AlgSubgroup("DiagTorusMuQ", TORUS_EQUATIONS + (_g11 ** q - 1,), ("D",), q)


def dihedral_mu(q: int) -> AlgSubgroup:
    _check_order(q)
    return AlgSubgroup(
        "DihedralMuQ", FULL_G_EQUATIONS + (_g11 ** q + _g12 ** q - 1,), ("D", "N"), q
    )


def trivial_group() -> AlgSubgroup:
    return AlgSubgroup("Trivial", (_g11 - 1, _g12, _g21, _g22 - 1), ("D",), 1)


def custom_group(equations) -> AlgSubgroup:
    return AlgSubgroup("Custom", tuple(equations))


def _check_order(q: int):
    if not isinstance(q, int) or q < 1:
        raise ValueError(f"root order must be a positive integer, got {q!r}")


CATALOG = {
    "FullG": full_group,
    "DiagTorus": diag_torus,
    "DiagTorusMuQ": diag_torus_mu,
    "DihedralMuQ": dihedral_mu,
    "Trivial": trivial_group,
}

chebyshev_full_group = full_group


# -- elements ----------------------------------------------------------------------

def parameter_ring(q: Optional[int] = None, name: str = "xi") -> LaurentPoly:
    """The generator xi of Q[xi, 1/xi], or of Q[xi]/(xi^q - 1) when q is given."""
    return LaurentPoly((name,), {(1,): 1}, moduli=(q,))


def _inv(a):
    inv = invert_scalar(a)
    if inv is None:
        raise NotAUnit(f"{a} is not invertible")
    return inv


def D(a) -> Matrix:
    return Matrix([[a, 0 * a], [0 * a, _inv(a)]])


def N(a) -> Matrix:
    return Matrix([[0 * a, a], [_inv(a), 0 * a]])


def template(shape: str, a) -> Matrix:
    return D(a) if shape == "D" else N(a)


def _values(g: Matrix):
    return dict(zip(G_GENS, g.entries()))


def membership(g: Matrix, H: AlgSubgroup) -> bool:
    """All defining equations vanish at g and det(g) is a unit."""
    if g.shape != (2, 2):
        return False
    values = _values(g)
    for eq in H.equations:
        if eq.evaluate(values) != 0:
            return False
    return invert_scalar(g.det()) is not None


def shape_of(g: Matrix) -> Tuple[str, object]:
    """Split an element of G as D(a) or N(a)."""
    if not membership(g, full_group()):
        raise NotInG(f"{g} is not in G")
    if g[0, 1] == 0:
        return "D", g[0, 0]
    return "N", g[0, 1]


_PRODUCT_SHAPE = {("D", "D"): "D", ("D", "N"): "N", ("N", "D"): "N", ("N", "N"): "D"}


def _one_like(a):
    return a * _inv(a)


def _is_root(a, q: Optional[int]) -> bool:
    return q is None or a ** q == 1


@dataclass(frozen=True)
class NotDecomposable:
    """No factorization exists; ``reason`` says which constraint fails."""

    element: Matrix
    reason: str
    verdict: str = field(default="not decomposable", init=False)


@dataclass(frozen=True)
class Factorization:
    h: Matrix
    hp: Matrix
    verdict: str = field(default="decomposable", init=False)


def _split_finite(gamma, q1: int, q2: int, quotient: bool):
    """Find a, b with a^q1 = b^q2 = 1 and ab = gamma (or a/b = gamma)."""
    L = lcm(q1, q2)
    if gamma ** L != 1:
        return None
    for u in range(L):
        a = gamma ** u
        b = gamma ** (u - 1) if quotient else gamma ** (1 - u)
        if a ** q1 == 1 and b ** q2 == 1:
            return a, b
    return None


def product_decompose(g: Matrix, H: AlgSubgroup, Hp: AlgSubgroup):
    """Write g = h h' with h in H and h' in Hp, or explain why this is impossible."""
    if not (H.is_catalog() and Hp.is_catalog()):
        raise ValueError("product decomposition needs catalog groups")
    shape, gamma = shape_of(g)
    one = _one_like(gamma)
    for X in H.shapes:
        for Y in Hp.shapes:
            if _PRODUCT_SHAPE[(X, Y)] != shape:
                continue
            quotient = X == "N"
            if H.root_order is None:
                b = one
                a = gamma * b if quotient else gamma
            elif Hp.root_order is None:
                a = one
                b = _inv(gamma) if quotient else gamma
            else:
                ab = _split_finite(gamma, H.root_order, Hp.root_order, quotient)
                if ab is None:
                    continue
                a, b = ab
            h, hp = template(X, a), template(Y, b)
            if h * hp == g and membership(h, H) and membership(hp, Hp):
                return Factorization(h, hp)
    if H.root_order is not None and Hp.root_order is not None:
        L = lcm(H.root_order, Hp.root_order)
        reason = f"both factors are finite and the parameter is not a root of unity of order dividing {L}"
    else:
        reason = f"no product of shapes {H.shapes} x {Hp.shapes} gives shape {shape}"
    return NotDecomposable(g, reason)


def check_product_equal(H: AlgSubgroup, Hp: AlgSubgroup) -> Check:
    """Pass iff both symbolic templates of G factor through H * Hp."""
    xi = parameter_ring(None)
    witnesses = []
    for shape in ("D", "N"):
        g = template(shape, xi)
        res = product_decompose(g, H, Hp)
        if isinstance(res, NotDecomposable):
            concrete = template(shape, Fraction(2))
            cres = product_decompose(concrete, H, Hp)
            if not isinstance(cres, NotDecomposable):
                concrete = g
            return failed(
                residual=concrete,
                which=shape,
                detail=f"{H.name} * {Hp.name} misses {concrete}: {res.reason}",
                witness=concrete,
            )
        witnesses.append((g, res.h, res.hp))
    return passed(f"G = {H.name} * {Hp.name}", witness=witnesses)


# -- specializations -------------------------------------------------------------------

_CYCLOTOMIC = {Fraction(1, 2): 6, Fraction(0): 4, Fraction(-1, 2): 3}


def root_of_unity_order(c1) -> Optional[int]:
    """Multiplicative order of alpha = c1 + sqrt(c1^2 - 1), or None if infinite.

    alpha is a root of X^2 - 2 c1 X + 1. When sqrt(c1^2 - 1) is rational, alpha is
    rational and only +-1 have finite order; otherwise the quadratic must be a
    cyclotomic polynomial of degree 2, i.e. Phi_3, Phi_4 or Phi_6.
    """
    c1 = Fraction(c1)
    r = rational_sqrt(c1 * c1 - 1)
    if r is not None:
        alpha = c1 + r
        if alpha == 1:
            return 1
        if alpha == -1:
            return 2
        return None
    return _CYCLOTOMIC.get(c1)


def alpha_of(c1):
    """alpha = c1 + sqrt(c1^2 - 1) in Q or in Q(sqrt(c1^2 - 1))."""
    c1 = Fraction(c1)
    d = c1 * c1 - 1
    r = rational_sqrt(d)
    if r is not None:
        return c1 + r
    return QuadExt(c1, 1, d)


def stab_sigma(c1) -> AlgSubgroup:
    c1 = Fraction(c1)
    specialize_t(chebyshev_system(), c1)
    q = root_of_unity_order(c1)
    return diag_torus() if q is None else diag_torus_mu(q)


def stab_delta(c2) -> AlgSubgroup:
    if c2 is NONRATIONAL:
        return full_group()
    c2 = Fraction(c2)
    if not shift_orbit_nonvanishing(chebyshev_system().h, c2):
        raise InvalidSpecialization(f"h vanishes on the orbit {c2} + Z")
    return dihedral_mu(c2.denominator)


# -- relations satisfied by the fundamental matrix ----------------------------------------------

def pv_generators(W: Matrix, t_value=None):
    """f1 = W11 W12 - 1, f2 = W21 W22 - 1, f3 = u^2 - 2 t u + 1 with u = W11 W22."""
    from .chebyshev import t as t_var

    tv = t_var if t_value is None else t_value
    u = W[0, 0] * W[1, 1]
    return {
        "f1": W[0, 0] * W[0, 1] - 1,
        "f2": W[1, 0] * W[1, 1] - 1,
        "f3": u * u - u * (2 * tv) + 1,
    }


def verify_pv_relations(W: Matrix | None = None) -> Check:
    if W is None:
        W = tower_solution()
    for name, value in pv_generators(W).items():
        if value != 0:
            return failed(residual=value, which=name, detail=f"{name}(W) = {value}")
    from .algebra.tower import tower

    A = chebyshev_A().map(tower)
    B = chebyshev_B().map(tower)
    r = apply_sigma(W) - A * W
    if not r.is_zero():
        return failed(residual=r, which="sigma", detail="sigma(W) != A W")
    r = apply_delta(W) - B * W
    if not r.is_zero():
        return failed(residual=r, which="delta", detail="delta(W) != B W")
    return passed("f1(W) = f2(W) = f3(W) = 0, sigma(W) = A W, delta(W) = B W")


# -- the quotient ring for sigma-stability --------------------------------------------

class QuotU:
    """p0 + p1 u in F[u]/(u^2 - 2 c u + 1), F = Q or Q(sqrt(c^2 - 1))."""

    __slots__ = ("p0", "p1", "c")

    def __init__(self, p0, p1, c: Fraction):
        self.p0, self.p1, self.c = p0, p1, c

    def _lift(self, o):
        if isinstance(o, QuotU):
            return o
        return QuotU(o, 0 * o, self.c) if not isinstance(o, int) else QuotU(Fraction(o), Fraction(0), self.c)

    def __add__(self, o):
        o = self._lift(o)
        return QuotU(self.p0 + o.p0, self.p1 + o.p1, self.c)

    __radd__ = __add__

    def __neg__(self):
        return QuotU(-self.p0, -self.p1, self.c)

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __rsub__(self, o):
        return self._lift(o) - self

    def __mul__(self, o):
        o = self._lift(o)
        # u^2 = 2 c u - 1
        sq = self.p1 * o.p1
        return QuotU(
            self.p0 * o.p0 - sq,
            self.p0 * o.p1 + self.p1 * o.p0 + sq * (2 * self.c),
            self.c,
        )

    __rmul__ = __mul__

    def at(self, root):
        """Image under u -> root, a root of u^2 - 2 c u + 1."""
        return self.p0 + self.p1 * root

    def inverse(self) -> "QuotU":
        # (p0 + p1 u)(p0 + p1 (2c - u)) = p0^2 + 2c p0 p1 + p1^2
        n = self.p0 * self.p0 + self.p0 * self.p1 * (2 * self.c) + self.p1 * self.p1
        if n == 0:
            raise NotAUnit(f"{self} is a zero divisor")
        ninv = _inv(n)
        return QuotU((self.p0 + self.p1 * (2 * self.c)) * ninv, -self.p1 * ninv, self.c)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = QuotU(Fraction(1), Fraction(0), self.c)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, o):
        if isinstance(o, (int, Fraction, QuadExt)) or isinstance(o, QuotU):
            o = self._lift(o)
            return self.p0 == o.p0 and self.p1 == o.p1
        return NotImplemented

    def __hash__(self):
        return hash((self.p0, self.p1))

    def __str__(self):
        if self.p1 == 0:
            return str(self.p0)
        return f"{self.p0} + ({self.p1})*u"

    __repr__ = __str__


class QuotientRing:
    """Laurent polynomials in X11 over F[u]/(u^2 - 2 c u + 1), u standing for X11 X22.

    X12 = 1/X11 and X22 = u/X11, X21 = 1/X22 = X11/u. The shift acts through
    X -> A(c) X: sigma(X11) = X21 and sigma(X22) = -X12 + 2 c X22.
    """

    def __init__(self, c1):
        self.c = Fraction(c1)
        if self.c * self.c == 1:
            raise InvalidSpecialization(f"alpha degenerates at c1 = {self.c}")
        self.alpha = alpha_of(self.c)
        self.alpha_bar = 2 * self.c - self.alpha
        zero = 0 * self.alpha
        self.u = self.scalar(QuotU(zero, zero + 1, self.c))
        self.X11 = LaurentPoly(("X11",), {(1,): QuotU(zero + 1, zero, self.c)})

    def scalar(self, q: QuotU) -> LaurentPoly:
        return LaurentPoly(("X11",), {(0,): q})

    def const(self, v) -> LaurentPoly:
        zero = 0 * self.alpha
        return self.scalar(QuotU(zero + v, zero, self.c))

    @property
    def X12(self):
        return self.X11.inverse()

    @property
    def X22(self):
        return self.u * self.X11.inverse()

    @property
    def X21(self):
        return self.X11 * self.u.inverse()

    def sigma(self, f: LaurentPoly) -> LaurentPoly:
        s11 = self.X21
        s22 = -self.X12 + self.X22 * (2 * self.c)
        su = (s11 * s22).constant_value()
        out = LaurentPoly(("X11",))
        for (k,), q in f.terms.items():
            coeff = self.scalar(QuotU(q.p0, 0 * q.p0, self.c)) + self.scalar(su) * q.p1
            out = out + coeff * s11 ** k
        return out

    def vanishes_at(self, f: LaurentPoly, root) -> bool:
        return all(q.at(root) == 0 for q in f.terms.values())


def verify_sigma_stability(c1, generator: Callable | None = None) -> Check:
    """The ideal generated by u - alpha (or ``generator(ring)``) is proper and sigma-stable."""
    R = QuotientRing(c1)
    g = generator(R) if generator is not None else R.u - R.const(R.alpha)
    roots = [r for r in (R.alpha, R.alpha_bar) if R.vanishes_at(g, r)]
    if not roots:
        return failed(residual=g, which="proper", detail=f"{g} is a unit, so it generates the whole ring")
    sg = R.sigma(g)
    for r in roots:
        if not R.vanishes_at(sg, r):
            return failed(residual=sg, which="stable", detail=f"sigma({g}) = {sg} is not in the ideal")
    witness = {"generator": g, "sigma": sg}
    if generator is None:
        lam = R.const(_inv(R.alpha)) * R.u.inverse()
        if lam * g != sg:
            return failed(residual=lam * g - sg, which="lambda", detail="sigma(g) != g / (alpha u)")
        witness["lambda"] = lam
    return passed(f"sigma({g}) = {sg} lies in the ideal", witness=witness)
