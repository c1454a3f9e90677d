"""Linear dependence over the constants via generalized Wronskians.

Over a simple ring, a1..am are dependent over the constants exactly when
det(theta_i(a_j)) vanishes for every choice of words theta_1..theta_m, and a
nonzero determinant can always be found with theta_1 = 1. The search below
looks for such a determinant among words of bounded length, and looks for
rational constants directly by linear algebra over Q.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Dict, List, Sequence, Tuple

from .algebra.matrix import Matrix
from .algebra.poly import Poly, poly_lcm
from .algebra.quadext import QuadExt
from .algebra.ratfunc import RatFunc
from .algebra.tower import TowerElem
from .errors import EmptyInput, ShapeError
from .operators import IDENTITY, ThetaWord, apply_theta, enumerate_theta


# -- ring modes ----------------------------------------------------------------

@dataclass(frozen=True)
class SimpleRing:
    """Q(x, t) or the eta tower; both operators act and the constants are Q."""

    operators: Tuple[str, ...] = ("sigma", "delta")
    simple: bool = True


@dataclass(frozen=True)
class NonSimpleFixture:
    """Q[gens] with sigma(g) = factor * g for every generator; no derivation.

    Such a ring need not be simple, so vanishing determinants prove nothing.
    """

    gens: Tuple[str, ...]
    sigma_factors: Tuple[Fraction, ...]
    operators: Tuple[str, ...] = ("sigma",)
    simple: bool = False

    def gen(self, name: str) -> "FixtureElem":
        return FixtureElem(self, Poly.var(self.gens, name))

    def element(self, p: Poly) -> "FixtureElem":
        return FixtureElem(self, p)


def scaling_fixture(factor=2, gens=("y", "z")) -> NonSimpleFixture:
    """Q[y, z] with sigma(y) = 2y, sigma(z) = 2z."""
    return NonSimpleFixture(tuple(gens), tuple(Fraction(factor) for _ in gens))


class FixtureElem:
    __slots__ = ("ring", "poly")

    def __init__(self, ring: NonSimpleFixture, poly: Poly):
        self.ring = ring
        self.poly = poly

    def _wrap(self, p):
        return FixtureElem(self.ring, p)

    def _other(self, o):
        return o.poly if isinstance(o, FixtureElem) else o

    def sigma(self) -> "FixtureElem":
        values = {
            g: Poly.var(self.ring.gens, g) * f for g, f in zip(self.ring.gens, self.ring.sigma_factors)
        }
        return self._wrap(Poly.constant(self.ring.gens, 0) + self.poly.evaluate(values))

    def delta(self):
        raise TypeError("this fixture ring has no derivation")

    def __add__(self, o):
        return self._wrap(self.poly + self._other(o))

    __radd__ = __add__

    def __sub__(self, o):
        return self._wrap(self.poly - self._other(o))

    def __rsub__(self, o):
        return self._wrap(self._other(o) - self.poly)

    def __neg__(self):
        return self._wrap(-self.poly)

    def __mul__(self, o):
        return self._wrap(self.poly * self._other(o))

    __rmul__ = __mul__

    def __eq__(self, o):
        return self.poly == self._other(o)

    def __hash__(self):
        return hash(self.poly)

    def __str__(self):
        return str(self.poly)

    __repr__ = __str__


# -- verdicts ------------------------------------------------------------------

@dataclass(frozen=True)
class Independent:
    thetas: Tuple[ThetaWord, ...]
    det: object
    verdict: str = field(default="independent", init=False)


@dataclass(frozen=True)
class Dependent:
    constants: Tuple[Fraction, ...]
    verdict: str = field(default="dependent", init=False)


@dataclass(frozen=True)
class Inconclusive:
    bound: int
    determinants_checked: int = 0
    verdict: str = field(default="inconclusive", init=False)


# -- determinants ----------------------------------------------------------------

def wronskian_matrix(elems: Sequence, thetas: Sequence[ThetaWord]) -> Matrix:
    if len(elems) != len(thetas):
        raise ShapeError(f"{len(elems)} elements but {len(thetas)} words")
    if not elems:
        raise EmptyInput("no elements")
    return Matrix([[apply_theta(w, a) for a in elems] for w in thetas])


def classical_determinant(elems: Sequence, kind: str = "wronskian"):
    m = len(elems)
    if m == 0:
        raise EmptyInput("no elements")
    kind = kind.lower()
    if kind == "wronskian":
        thetas = [ThetaWord(0, j) for j in range(m)]
    elif kind == "casoratian":
        thetas = [ThetaWord(i, 0) for i in range(m)]
    else:
        raise ValueError(f"unknown determinant kind {kind!r}")
    return wronskian_matrix(elems, thetas).det()


def _allowed(w: ThetaWord, operators) -> bool:
    return (w.sigma_power == 0 or "sigma" in operators) and (
        w.delta_power == 0 or "delta" in operators
    )


def theta_tuples(m: int, L: int, operators=("sigma", "delta")):
    """m-tuples of distinct words starting with 1 whose longest word has length exactly L."""
    words = [w for w in enumerate_theta(L) if _allowed(w, operators) and not w.is_identity()]
    for rest in combinations(words, m - 1):
        if m == 1 and L > 0:
            return
        if rest and max(w.length for w in rest) != L:
            continue
        yield (IDENTITY,) + rest


# -- dependence over Q -------------------------------------------------------------

def _flatten(a) -> List[Tuple[tuple, object]]:
    """Split an element into keyed pieces that are rational functions or polynomials."""
    if isinstance(a, (int, Fraction)):
        return [((), RatFunc.const(a))]
    if isinstance(a, Poly):
        return [((), RatFunc(a))]
    if isinstance(a, RatFunc):
        return [((), a)]
    if isinstance(a, QuadExt):
        return [(("a",) + k, v) for k, v in _flatten(a.a)] + [
            (("b",) + k, v) for k, v in _flatten(a.b)
        ]
    if isinstance(a, TowerElem):
        out = []
        for e, c in a.terms.items():
            out.extend(((e[0],) + k, v) for k, v in _flatten(c))
        return out
    if isinstance(a, FixtureElem):
        return [((), a.poly)]
    raise TypeError(f"cannot take coordinates of {type(a).__name__}")


def coordinates(elems: Sequence) -> List[Dict[tuple, Fraction]]:
    """Q-coordinates of the elements after clearing a common denominator."""
    pieces = [_flatten(a) for a in elems]
    common = None
    for ps in pieces:
        for _, v in ps:
            if isinstance(v, RatFunc):
                common = v.den if common is None else poly_lcm(common, v.den)
    out = []
    for ps in pieces:
        coords: Dict[tuple, Fraction] = {}
        for key, v in ps:
            if isinstance(v, RatFunc):
                v = v.num * common.divexact(v.den)
            for exp, c in v.terms.items():
                k = key + exp
                coords[k] = coords.get(k, Fraction(0)) + c
        out.append({k: c for k, c in coords.items() if c})
    return out


def rational_nullspace(columns: List[Dict[tuple, Fraction]]) -> List[List[Fraction]]:
    """Basis of {c : sum c_j * column_j = 0} over Q, by Gauss-Jordan elimination."""
    keys = sorted({k for col in columns for k in col}, key=repr)
    n = len(columns)
    rows = [[col.get(k, Fraction(0)) for col in columns] for k in keys]
    pivots = []
    r = 0
    for j in range(n):
        p = next((i for i in range(r, len(rows)) if rows[i][j] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][j]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][j] != 0:
                f = rows[i][j]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(j)
        r += 1
    basis = []
    for free in (j for j in range(n) if j not in pivots):
        v = [Fraction(0)] * n
        v[free] = Fraction(1)
        for i, pj in enumerate(pivots):
            v[pj] = -rows[i][free]
        basis.append(v)
    return basis


def normalize_constants(v: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    """Integer vector with gcd 1 and positive first nonzero entry."""
    den = 1
    for c in v:
        den = lcm(den, Fraction(c).denominator)
    ints = [int(c * den) for c in v]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if g == 0:
        return tuple(Fraction(0) for _ in v)
    first = next(c for c in ints if c)
    if first < 0:
        g = -g
    return tuple(Fraction(c // g) for c in ints)


def find_rational_dependence(elems: Sequence) -> Tuple[Fraction, ...] | None:
    basis = rational_nullspace(coordinates(elems))
    if not basis:
        return None
    return normalize_constants(basis[0])


def verify_dependence_certificate(elems: Sequence, constants: Sequence) -> bool:
    if len(elems) != len(constants):
        raise ShapeError("one constant per element is required")
    if not any(constants):
        return False
    total = 0
    for c, a in zip(constants, elems):
        total = a * Fraction(c) + total
    return total == 0


# -- decision ------------------------------------------------------------------

def decide_dependence(elems: Sequence, mode=None, L_max: int | None = None):
    elems = list(elems)
    m = len(elems)
    if m == 0:
        raise EmptyInput("no elements")
    mode = mode or SimpleRing()
    if L_max is None:
        L_max = 2 * m
    consts = find_rational_dependence(elems)
    if consts is not None and verify_dependence_certificate(elems, consts):
        return Dependent(consts)
    cache: Dict[Tuple[ThetaWord, int], object] = {}

    def entry(w, j):
        key = (w, j)
        if key not in cache:
            cache[key] = apply_theta(w, elems[j])
        return cache[key]

    checked = 0
    for L in range(L_max + 1):
        for thetas in theta_tuples(m, L, mode.operators):
            M = Matrix([[entry(w, j) for j in range(m)] for w in thetas])
            d = M.det()
            checked += 1
            if d != 0:
                return Independent(tuple(thetas), d)
    return Inconclusive(L_max, checked)
