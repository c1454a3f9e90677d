"""Linear systems sigma(Y) = A Y, delta(Y) = B Y over Q(x, t) and their specializations."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra.matrix import Matrix
from .algebra.poly import Poly, poly_gcd, rational_roots
from .algebra.ratfunc import GENS, RatFunc
from .errors import (
    DivisionByZero,
    InvalidSpecialization,
    ShapeError,
    SingularSpecialization,
    ZeroPolynomial,
)
from .operators import apply_delta, apply_sigma
from .results import Check, failed, passed


class NonRational:
    """Marker for a specialization point outside Q."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NONRATIONAL"

    __str__ = __repr__


NONRATIONAL = NonRational()

# how far along the x-orbit of h a denominator factor may sit
WITNESS_WINDOW = 16


def _as_ratfunc(v) -> RatFunc:
    if isinstance(v, RatFunc):
        return v
    if isinstance(v, Poly):
        return RatFunc(v)
    return RatFunc.const(v)


def _as_poly(h) -> Poly:
    if isinstance(h, Poly):
        return h
    if isinstance(h, RatFunc):
        if not h.is_polynomial():
            raise ValueError(f"denominator witness {h} must be a polynomial")
        return h.num * (1 / h.den.constant_value())
    return Poly.constant(GENS, h)


def explained_by_witness(den: Poly, h: Poly, window: int = WITNESS_WINDOW) -> bool:
    """True if ``den`` divides a product of shifts h(x+i), |i| <= window."""
    rest = den
    for i in range(-window, window + 1):
        if rest.is_constant():
            break
        hi = h.shift("x", i)
        g = poly_gcd(rest, hi)
        while not g.is_constant():
            rest = rest.divexact(g)
            g = poly_gcd(rest, hi)
    return rest.is_constant()


@dataclass(frozen=True, init=False)
class SigmaDeltaSystem:
    A: Matrix
    B: Matrix
    h: Poly

    def __init__(self, A: Matrix, B: Matrix, h=1, validate: bool = True):
        A = A.map(_as_ratfunc)
        B = B.map(_as_ratfunc)
        h = _as_poly(h)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "h", h)
        if not A.is_square() or not B.is_square() or A.shape != B.shape:
            raise ShapeError(f"A and B must be square of equal size, got {A.shape} and {B.shape}")
        if validate:
            self.validate()

    @property
    def n(self) -> int:
        return self.A.nrows

    def validate(self):
        if self.h.is_zero():
            raise ValueError("the denominator witness must be nonzero")
        inv = self.A.inverse()
        if inv is None:
            raise ValueError("A must be invertible over Q(x, t)")
        for name, m in (("A", self.A), ("A^-1", inv), ("B", self.B)):
            for v in m.entries():
                if not explained_by_witness(v.den, self.h):
                    raise ValueError(
                        f"denominator {v.den} of an entry of {name} is not explained by h = {self.h}"
                    )


@dataclass(frozen=True)
class DifferenceSystem:
    """sigma(Y) = A Y after fixing t."""

    A: Matrix

    @property
    def n(self) -> int:
        return self.A.nrows


@dataclass(frozen=True)
class DifferentialSystem:
    """delta(Y) = B Y after fixing x."""

    B: Matrix

    @property
    def n(self) -> int:
        return self.B.nrows


def integrability_residual(S: SigmaDeltaSystem) -> Matrix:
    """sigma(B) A - delta(A) - A B."""
    if S.A.shape != S.B.shape:
        raise ShapeError("A and B differ in shape")
    return apply_sigma(S.B) * S.A - apply_delta(S.A) - S.A * S.B


def check_integrability(S: SigmaDeltaSystem) -> Check:
    r = integrability_residual(S)
    if r.is_zero():
        return passed("sigma(B)A = delta(A) + AB")
    return failed(residual=r, detail="sigma(B)A - delta(A) - AB is not zero")


def _subs_matrix(M: Matrix, var: str, value) -> Matrix:
    try:
        return M.map(lambda v: v.subs({var: value}))
    except DivisionByZero as e:
        raise InvalidSpecialization(str(e)) from None


def specialize_t(S: SigmaDeltaSystem, c1) -> DifferenceSystem:
    c1 = Fraction(c1)
    if S.h.subs({"t": c1}).is_zero():
        raise InvalidSpecialization(f"h = {S.h} vanishes at t = {c1}")
    A = _subs_matrix(S.A, "t", c1)
    _subs_matrix(S.B, "t", c1)
    if A.det() == 0:
        raise SingularSpecialization(f"det A vanishes at t = {c1}")
    return DifferenceSystem(A)


def shift_orbit_nonvanishing(h, c2) -> bool:
    """True iff h(c2 + i, t) is a nonzero polynomial for every integer i."""
    h = _as_poly(h)
    if h.is_zero():
        raise ZeroPolynomial("h must be nonzero")
    if c2 is NONRATIONAL:
        # an irrational point is never a rational root plus an integer
        return True
    c2 = Fraction(c2)
    g = None
    for coeff in h.coeffs_in("t").values():
        g = coeff if g is None else poly_gcd(g, coeff)
    if g.is_constant():
        return True
    for r in set(rational_roots(g, "x")):
        if (r - c2).denominator == 1:
            return False
    return True


def specialize_x(S: SigmaDeltaSystem, c2) -> DifferentialSystem:
    if c2 is NONRATIONAL:
        raise InvalidSpecialization("x can only be fixed at a rational value")
    c2 = Fraction(c2)
    if not shift_orbit_nonvanishing(S.h, c2):
        raise InvalidSpecialization(f"h = {S.h} vanishes on the orbit {c2} + Z")
    return DifferentialSystem(_subs_matrix(S.B, "x", c2))


def conjugation_check(S: SigmaDeltaSystem, c, s_max: int) -> Check:
    """Check B(c+s) P_s = delta(P_s) + P_s B(c) with P_s = A(c+s-1)...A(c), 1 <= s <= s_max."""
    c = Fraction(c)
    A_at = [_subs_matrix(S.A, "x", c + i) for i in range(s_max)]
    B_at = [_subs_matrix(S.B, "x", c + i) for i in range(s_max + 1)]
    for i, a in enumerate(A_at):
        if a.det() == 0:
            raise InvalidSpecialization(f"A is singular at x = {c + i}")
    P = Matrix.identity(S.n)
    for s in range(1, s_max + 1):
        P = A_at[s - 1] * P
        r = B_at[s] * P - apply_delta(P) - P * B_at[0]
        if not r.is_zero():
            return failed(residual=r, index=s, detail=f"conjugation fails at s = {s}")
    return passed(f"B(c+s) P_s = delta(P_s) + P_s B(c) for 1 <= s <= {s_max}")
