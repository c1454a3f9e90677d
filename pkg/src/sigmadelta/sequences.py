"""Sequences up to germ equivalence, and solutions of the Chebyshev system built from them.

A sequence is a map s -> value for s >= 0; two sequences are identified when
they agree from some index on. Equality is decided on a finite window.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, List, Sequence

from .algebra.matrix import Matrix
from .algebra.poly import Poly, poly_gcd, rational_roots
from .algebra.ratfunc import RatFunc
from .chebyshev import chebyshev_A, chebyshev_B
from .errors import DivisionByZero, InvalidSpecialization
from .operators import apply_delta
from .results import Check, failed, passed

DEFAULT_WINDOW = 8


@dataclass(frozen=True)
class GermSeq:
    """Values ``generator(s)`` for s >= start_index and 0 before it."""

    generator: Callable[[int], object]
    start_index: int = 0
    window: int = DEFAULT_WINDOW

    def __getitem__(self, s: int):
        if s < 0:
            raise IndexError("sequence indices are nonnegative")
        if s < self.start_index:
            return Fraction(0)
        return self.generator(s)

    def prefix(self, n: int) -> List:
        return [self[s] for s in range(n)]

    def shift(self) -> "GermSeq":
        """The sequence (a_1, a_2, ...)."""
        g = self.generator
        return GermSeq(lambda s: g(s + 1), max(self.start_index - 1, 0), self.window)

    def map(self, f: Callable) -> "GermSeq":
        g = self.generator
        return GermSeq(lambda s: f(g(s)), self.start_index, self.window)

    @classmethod
    def from_values(cls, values: Sequence, window: int | None = None) -> "GermSeq":
        """A materialized prefix; indices past the end raise IndexError."""
        vals = tuple(values)
        return cls(vals.__getitem__, 0, window if window is not None else max(len(vals) // 2, 1))


def germ_agreement_start(a: GermSeq, b: GermSeq, window: int) -> int | None:
    """Smallest d <= window with a_i = b_i for d <= i <= 2*window, or None."""
    if window < 1:
        raise ValueError("window must be at least 1")
    d = 2 * window + 1
    while d > 0 and a[d - 1] == b[d - 1]:
        d -= 1
    return d if d <= window else None


def germ_equal(a: GermSeq, b: GermSeq, window: int | None = None) -> bool:
    if window is None:
        window = max(a.window, b.window)
    return germ_agreement_start(a, b, window) is not None


def _orbit_poles(den: Poly) -> List[Fraction]:
    """Rational x at which den(x, t) vanishes identically in t."""
    g = None
    for coeff in den.coeffs_in("t").values():
        g = coeff if g is None else poly_gcd(g, coeff)
    if g is None or g.is_constant():
        return []
    return sorted(set(rational_roots(g, "x")))


def embed_ratfunc(f: RatFunc, c, window: int = DEFAULT_WINDOW) -> GermSeq:
    """The sequence s -> f(c + s) with the finitely many poles on c + N replaced by 0."""
    c = Fraction(c)
    nu = 0
    for r in _orbit_poles(f.den):
        k = r - c
        if k.denominator == 1 and k >= 0:
            nu = max(nu, int(k) + 1)
    return GermSeq(lambda s: f.subs({"x": c + s}), nu, window)


# -- fundamental sequences -------------------------------------------------------

def _at(M: Matrix, c) -> Matrix:
    def sub(v):
        if isinstance(v, RatFunc):
            return v.subs({"x": c})
        return v

    try:
        return M.map(sub)
    except DivisionByZero as e:
        raise InvalidSpecialization(str(e)) from None


def fundamental_sequence(A: Matrix, c, U: Matrix, N: int) -> List[Matrix]:
    """[W_0 U, ..., W_N U] with W_0 = I and W_s = A(c + s - 1) W_(s-1)."""
    c = Fraction(c)
    if U.inverse() is None:
        raise InvalidSpecialization("U must be invertible")
    W = Matrix.identity(A.nrows)
    out = [W * U]
    for s in range(1, N + 1):
        As = _at(A, c + s - 1)
        if As.det() == 0:
            raise InvalidSpecialization(f"A is singular at x = {c + s - 1}")
        W = As * W
        out.append(W * U)
    return out


def verify_sigma_solution(seq: Sequence[Matrix], A: Matrix, c, N: int) -> Check:
    c = Fraction(c)
    if len(seq) < N + 1:
        raise ValueError(f"need {N + 1} terms, got {len(seq)}")
    for s in range(N):
        r = seq[s + 1] - _at(A, c + s) * seq[s]
        if not r.is_zero():
            return failed(residual=r, index=s, detail=f"W_{s + 1} != A(c+{s}) W_{s}")
    return passed(f"W_(s+1) = A(c+s) W_s for 0 <= s < {N}")


def verify_delta_solution(seq: Sequence[Matrix], B: Matrix, c, N: int) -> Check:
    c = Fraction(c)
    if len(seq) < N + 1:
        raise ValueError(f"need {N + 1} terms, got {len(seq)}")
    for s in range(N + 1):
        r = apply_delta(seq[s]) - _at(B, c + s) * seq[s]
        if not r.is_zero():
            return failed(residual=r, index=s, detail=f"delta(W_{s}) != B(c+{s}) W_{s}")
    return passed(f"delta(W_s) = B(c+s) W_s for 0 <= s <= {N}")


# -- Chebyshev polynomials --------------------------------------------------------

_t = RatFunc.var("t")


def chebyshev_sum_formula(m: int) -> RatFunc:
    """T_m from the closed sum (m/2) sum_l (-1)^l (m-l-1)! / (l! (m-2l)!) (2t)^(m-2l), m >= 1."""
    if m < 1:
        raise ValueError("the closed sum is stated for m >= 1")
    total = RatFunc.const(0)
    for l in range(m // 2 + 1):
        coeff = Fraction((-1) ** l * factorial(m - l - 1), factorial(l) * factorial(m - 2 * l))
        total = total + (2 * _t) ** (m - 2 * l) * coeff
    return total * Fraction(m, 2)


def chebyshev_recurrence(m_max: int, seeds=None) -> List[RatFunc]:
    """[T_0, ..., T_m_max] with T_0 = 1 and T_(m+1) = 2t T_m - T_(m-1) from the seeds T_1, T_2."""
    T1, T2 = seeds if seeds is not None else (_t, 2 * _t * _t - 1)
    T = [RatFunc.const(1), T1, T2]
    while len(T) <= m_max:
        T.append(2 * _t * T[-1] - T[-2])
    return T[: m_max + 1]


@dataclass(frozen=True)
class WitnessRow:
    m: int
    T: RatFunc
    sum_formula_agrees: bool
    sigma_residual: Matrix
    delta_residual: Matrix

    @property
    def ok(self) -> bool:
        return self.sum_formula_agrees and self.sigma_residual.is_zero() and self.delta_residual.is_zero()


def chebyshev_vector(T: Sequence[RatFunc], m: int) -> Matrix:
    """Y_m = (T_(m-1), T_m)^t, the solution vector at integer x = m."""
    return Matrix([[T[m - 1]], [T[m]]])


def chebyshev_witness(m_max: int, seeds=None) -> List[WitnessRow]:
    """For 1 <= m <= m_max check Y_(m+1) = A Y_m and delta(Y_m) = B(m) Y_m."""
    if m_max < 2:
        raise ValueError("m_max must be at least 2")
    T = chebyshev_recurrence(m_max + 1, seeds)
    A, B = chebyshev_A(), chebyshev_B()
    rows = []
    for m in range(1, m_max + 1):
        Y = chebyshev_vector(T, m)
        sig = chebyshev_vector(T, m + 1) - A * Y
        dlt = apply_delta(Y) - _at(B, m) * Y
        rows.append(WitnessRow(m, T[m], T[m] == chebyshev_sum_formula(m), sig, dlt))
    return rows
