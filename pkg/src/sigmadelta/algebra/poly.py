"""Sparse multivariate polynomials over the rationals.

A polynomial is a map from exponent tuples (one entry per generator) to
nonzero ``Fraction`` coefficients. Monomials are ordered graded
lexicographically with later generators ranking higher, so for the
generators ``("x", "t")`` we get ``x < t``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd, isqrt, lcm
from typing import Dict, Iterable, List, Mapping, Tuple

from ..errors import DivisionByZero, ZeroPolynomial

Exponent = Tuple[int, ...]


def _grlex_key(exp: Exponent):
    return (sum(exp), exp[::-1])


class Poly:
    __slots__ = ("gens", "_terms", "_hash")

    def __init__(self, gens: Iterable[str], terms: Mapping[Exponent, object] | None = None):
        self.gens = tuple(gens)
        n = len(self.gens)
        clean: Dict[Exponent, Fraction] = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(exp)
                if len(exp) != n:
                    raise ValueError(f"exponent {exp} does not match generators {self.gens}")
                if any(e < 0 for e in exp):
                    raise ValueError("negative exponent in polynomial")
                c = Fraction(c)
                if c:
                    clean[exp] = clean.get(exp, 0) + c
                    if not clean[exp]:
                        del clean[exp]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, gens, terms):
        obj = cls.__new__(cls)
        obj.gens = gens
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors ---------------------------------------------------
    @classmethod
    def constant(cls, gens, c) -> "Poly":
        gens = tuple(gens)
        c = Fraction(c)
        return cls._raw(gens, {(0,) * len(gens): c} if c else {})

    @classmethod
    def var(cls, gens, name: str) -> "Poly":
        gens = tuple(gens)
        exp = tuple(1 if g == name else 0 for g in gens)
        if sum(exp) != 1:
            raise ValueError(f"unknown generator {name!r} for {gens}")
        return cls._raw(gens, {exp: Fraction(1)})

    @classmethod
    def from_univariate(cls, gens, name: str, coeffs: Iterable) -> "Poly":
        """Build sum(coeffs[k] * name**k)."""
        gens = tuple(gens)
        i = gens.index(name)
        terms = {}
        for k, c in enumerate(coeffs):
            c = Fraction(c)
            if c:
                exp = [0] * len(gens)
                exp[i] = k
                terms[tuple(exp)] = c
        return cls._raw(gens, terms)

    def zero(self) -> "Poly":
        return Poly._raw(self.gens, {})

    def one(self) -> "Poly":
        return Poly.constant(self.gens, 1)

    # -- inspection -----------------------------------------------------
    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def constant_value(self) -> Fraction:
        return self._terms.get((0,) * len(self.gens), Fraction(0))

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def variables(self) -> List[str]:
        used = [False] * len(self.gens)
        for exp in self._terms:
            for i, e in enumerate(exp):
                if e:
                    used[i] = True
        return [g for g, u in zip(self.gens, used) if u]

    def degree(self, name: str | None = None) -> int:
        """Total degree, or degree in one generator; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        if name is None:
            return max(sum(e) for e in self._terms)
        i = self.gens.index(name)
        return max(e[i] for e in self._terms)

    def lead(self) -> Tuple[Exponent, Fraction]:
        exp = max(self._terms, key=_grlex_key)
        return exp, self._terms[exp]

    def monic(self) -> "Poly":
        if not self._terms:
            return self
        _, lc = self.lead()
        if lc == 1:
            return self
        return Poly._raw(self.gens, {e: c / lc for e, c in self._terms.items()})

    def coeffs_in(self, name: str) -> Dict[int, "Poly"]:
        """Coefficients w.r.t. one generator; the keys are its powers."""
        i = self.gens.index(name)
        out: Dict[int, Dict[Exponent, Fraction]] = {}
        for exp, c in self._terms.items():
            k = exp[i]
            rest = exp[:i] + (0,) + exp[i + 1:]
            out.setdefault(k, {})[rest] = c
        return {k: Poly._raw(self.gens, t) for k, t in out.items()}

    def content_q(self) -> Fraction:
        """Positive rational content (gcd of numerators over lcm of denominators)."""
        num = 0
        den = 1
        for c in self._terms.values():
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator)
        return Fraction(num, den) if num else Fraction(0)

    # -- arithmetic -----------------------------------------------------
    def _coerce(self, other) -> "Poly | None":
        if isinstance(other, Poly):
            if other.gens != self.gens:
                if other.is_constant():
                    return Poly.constant(self.gens, other.constant_value())
                if self.is_constant():
                    return None
                raise ValueError(f"generator mismatch: {self.gens} vs {other.gens}")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(self.gens, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, Poly):
                return Poly.constant(other.gens, self.constant_value()) + other
            return NotImplemented
        terms = dict(self._terms)
        for e, c in o._terms.items():
            v = terms.get(e, 0) + c
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        return Poly._raw(self.gens, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.gens, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, Poly):
                return Poly.constant(other.gens, self.constant_value()) - other
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self.zero()
            return Poly._raw(self.gens, {e: c * other for e, c in self._terms.items()})
        o = self._coerce(other)
        if o is None:
            if isinstance(other, Poly):
                return other * self.constant_value()
            return NotImplemented
        if not self._terms or not o._terms:
            return self.zero()
        terms: Dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = terms.get(e, 0) + c1 * c2
                if v:
                    terms[e] = v
                else:
                    del terms[e]
        return Poly._raw(self.gens, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers need a nonnegative integer exponent")
        result = self.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> "Poly":
        return self * Fraction(c)

    def mul_var_power(self, name: str, k: int) -> "Poly":
        i = self.gens.index(name)
        return Poly._raw(
            self.gens,
            {e[:i] + (e[i] + k,) + e[i + 1:]: c for e, c in self._terms.items()},
        )

    def __eq__(self, other):
        if isinstance(other, Poly):
            if other.gens != self.gens:
                return self.is_constant() and other.is_constant() and (
                    self.constant_value() == other.constant_value()
                )
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash((self.gens, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- division -------------------------------------------------------
    def divexact(self, other: "Poly") -> "Poly":
        """Exact quotient; raises ``ArithmeticError`` if ``other`` does not divide."""
        other = self._coerce(other)
        if other.is_zero():
            raise DivisionByZero("division by the zero polynomial")
        if other.is_constant():
            return self * (1 / other.constant_value())
        le, lc = other.lead()
        rem = dict(self._terms)
        quot: Dict[Exponent, Fraction] = {}
        while rem:
            e = max(rem, key=_grlex_key)
            diff = tuple(a - b for a, b in zip(e, le))
            if any(d < 0 for d in diff):
                raise ArithmeticError("polynomial division is not exact")
            q = rem[e] / lc
            quot[diff] = q
            for oe, oc in other._terms.items():
                te = tuple(a + b for a, b in zip(oe, diff))
                v = rem.get(te, 0) - q * oc
                if v:
                    rem[te] = v
                else:
                    rem.pop(te, None)
        return Poly._raw(self.gens, quot)

    def divides(self, other: "Poly") -> bool:
        try:
            other.divexact(self)
        except ArithmeticError:
            return False
        return True

    # -- calculus and substitution ---------------------------------------
    def diff(self, name: str) -> "Poly":
        i = self.gens.index(name)
        terms = {}
        for e, c in self._terms.items():
            if e[i]:
                terms[e[:i] + (e[i] - 1,) + e[i + 1:]] = c * e[i]
        return Poly._raw(self.gens, terms)

    def shift(self, name: str, c) -> "Poly":
        """Substitute ``name -> name + c``."""
        c = Fraction(c)
        if not c:
            return self
        i = self.gens.index(name)
        terms: Dict[Exponent, Fraction] = {}
        for e, coeff in self._terms.items():
            k = e[i]
            for j in range(k + 1):
                ne = e[:i] + (j,) + e[i + 1:]
                v = terms.get(ne, 0) + coeff * comb(k, j) * c ** (k - j)
                if v:
                    terms[ne] = v
                else:
                    terms.pop(ne, None)
        return Poly._raw(self.gens, terms)

    def subs(self, values: Mapping[str, object]) -> "Poly":
        """Substitute rational values for some generators (generators are kept)."""
        idx = {self.gens.index(k): Fraction(v) for k, v in values.items()}
        terms: Dict[Exponent, Fraction] = {}
        for e, c in self._terms.items():
            for i, v in idx.items():
                if e[i]:
                    c = c * v ** e[i]
            if not c:
                continue
            ne = tuple(0 if i in idx else a for i, a in enumerate(e))
            v = terms.get(ne, 0) + c
            if v:
                terms[ne] = v
            else:
                terms.pop(ne, None)
        return Poly._raw(self.gens, terms)

    def evaluate(self, values: Mapping[str, object]):
        """Evaluate at arbitrary ring values; generators not given must not occur."""
        result = 0
        for e, c in self._terms.items():
            term = c
            for g, k in zip(self.gens, e):
                if k:
                    term = term * values[g] ** k
            result = result + term
        return result

    def rename(self, gens: Iterable[str]) -> "Poly":
        gens = tuple(gens)
        if len(gens) != len(self.gens):
            raise ValueError("renaming must keep the number of generators")
        return Poly._raw(gens, dict(self._terms))

    def univariate_coeffs(self, name: str) -> List[Fraction]:
        """Dense ascending coefficients for a polynomial in ``name`` only."""
        i = self.gens.index(name)
        out = [Fraction(0)] * (self.degree(name) + 1 if self._terms else 0)
        for e, c in self._terms.items():
            if any(a for j, a in enumerate(e) if j != i):
                raise ValueError(f"polynomial is not univariate in {name}")
            out[e[i]] = c
        return out

    # -- display --------------------------------------------------------
    def format(self, names: Iterable[str] | None = None) -> str:
        names = tuple(names) if names is not None else self.gens
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, key=_grlex_key, reverse=True):
            c = self._terms[e]
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
            )
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Poly({self.format()!r}, gens={self.gens})"


# -- gcd -----------------------------------------------------------------

def _degree_in(p: Poly, i: int) -> int:
    return max((e[i] for e in p._terms), default=-1)


def _content(p: Poly, name: str) -> Poly:
    g = p.zero()
    for c in p.coeffs_in(name).values():
        g = poly_gcd(g, c)
        if g.is_constant():
            break
    return g


def _primitive(p: Poly, name: str) -> Poly:
    """Divide out the content in ``name`` and the rational content."""
    p = p.divexact(_content(p, name))
    c = p.content_q()
    return p.scale(1 / c) if c != 1 else p


def _lazy_prem(a: Poly, b: Poly, name: str) -> Poly:
    """Remainder of ``a`` by ``b`` in ``name``, up to a factor free of ``name``."""
    db = b.degree(name)
    lb = b.coeffs_in(name)[db]
    r = a
    if lb.is_constant():
        inv = 1 / lb.constant_value()
        while not r.is_zero() and r.degree(name) >= db:
            dr = r.degree(name)
            lr = r.coeffs_in(name)[dr]
            r = r - (lr * inv) * b.mul_var_power(name, dr - db)
        return r
    while not r.is_zero() and r.degree(name) >= db:
        dr = r.degree(name)
        lr = r.coeffs_in(name)[dr]
        r = lb * r - lr * b.mul_var_power(name, dr - db)
    return r


def _dense_gcd_degree(a: List[Fraction], b: List[Fraction]) -> int:
    """Degree of gcd of two dense ascending univariate polynomials over Q."""
    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    a, b = trim(list(a)), trim(list(b))
    while b:
        inv = 1 / b[-1]
        while len(a) >= len(b):
            q = a[-1] * inv
            off = len(a) - len(b)
            for k, c in enumerate(b):
                a[off + k] -= q * c
            a.pop()
            trim(a)
            if not a:
                break
        a, b = b, a
    return len(a) - 1


def _coprime_in(f: Poly, g: Poly, i: int) -> bool:
    """Cheap certificate that gcd(f, g) has degree 0 in generator ``i``.

    Fix the other generators at a point where neither leading coefficient in
    generator ``i`` vanishes; a constant gcd of the images bounds the degree.
    """
    name = f.gens[i]
    lf = f.coeffs_in(name)[_degree_in(f, i)]
    lg = g.coeffs_in(name)[_degree_in(g, i)]
    others = [gn for j, gn in enumerate(f.gens) if j != i]
    for trial in range(1, 6):
        point = {gn: Fraction(trial * (k + 2) + 1, k + 1) for k, gn in enumerate(others)}
        if lf.subs(point).is_zero() or lg.subs(point).is_zero():
            continue
        fa = f.subs(point).univariate_coeffs(name)
        ga = g.subs(point).univariate_coeffs(name)
        return _dense_gcd_degree(fa, ga) == 0
    return False


def _main_variable(f: Poly, g: Poly, used: List[int]) -> int:
    """Prefer a variable in which the smaller input has a constant leading coefficient."""
    small = f if len(f._terms) <= len(g._terms) else g
    for i in reversed(used):
        if _degree_in(f, i) > 0 and _degree_in(g, i) > 0:
            lc = small.coeffs_in(small.gens[i])[_degree_in(small, i)]
            if lc.is_constant():
                return i
    return used[-1]


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor over Q via recursive primitive remainder sequences."""
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    if f.is_constant() or g.is_constant():
        return f.one()
    if f.is_monomial() or g.is_monomial():
        mono, other = (f, g) if f.is_monomial() else (g, f)
        exp = list(next(iter(mono._terms)))
        for e in other._terms:
            exp = [min(a, b) for a, b in zip(exp, e)]
        return Poly._raw(f.gens, {tuple(exp): Fraction(1)})
    n = len(f.gens)
    used = [i for i in range(n) if _degree_in(f, i) > 0 or _degree_in(g, i) > 0]
    i = _main_variable(f, g, used)
    v = f.gens[i]
    if _degree_in(f, i) <= 0:
        return poly_gcd(f, _content(g, v))
    if _degree_in(g, i) <= 0:
        return poly_gcd(_content(f, v), g)
    cf = _content(f, v)
    cg = _content(g, v)
    c = poly_gcd(cf, cg)
    if len(used) > 1 and _coprime_in(f, g, i):
        return c.monic()
    a = _primitive(f, v)
    b = _primitive(g, v)
    if a.degree(v) < b.degree(v):
        a, b = b, a
    while True:
        r = _lazy_prem(a, b, v)
        if r.is_zero():
            break
        if r.degree(v) <= 0:
            b = f.one()
            break
        a, b = b, _primitive(r, v)
    return (c * b).monic()


def poly_lcm(f: Poly, g: Poly) -> Poly:
    if f.is_zero() or g.is_zero():
        return f.zero()
    return (f * g).divexact(poly_gcd(f, g)).monic()


# -- rational roots ------------------------------------------------------

def _divisors(n: int) -> List[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def _horner(coeffs_desc: List[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in coeffs_desc:
        acc = acc * x + c
    return acc


def _synthetic_div(coeffs_desc: List[Fraction], r: Fraction) -> List[Fraction]:
    out = []
    acc = Fraction(0)
    for c in coeffs_desc[:-1]:
        acc = acc * r + c
        out.append(acc)
    return out


def rational_roots(p: Poly, name: str | None = None) -> List[Fraction]:
    """All rational roots of a univariate polynomial, repeated by multiplicity."""
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial has every number as a root")
    if name is None:
        used = p.variables()
        if not used:
            return []
        if len(used) > 1:
            raise ValueError(f"expected a univariate polynomial, got variables {used}")
        name = used[0]
    asc = p.univariate_coeffs(name)
    den = 1
    for c in asc:
        den = lcm(den, c.denominator)
    desc = [Fraction(c * den) for c in reversed(asc)]
    roots: List[Fraction] = []
    while len(desc) > 1 and desc[-1] == 0:
        roots.append(Fraction(0))
        desc.pop()
    while len(desc) > 1:
        lead = int(desc[0])
        const = int(desc[-1])
        found = None
        for q in _divisors(lead):
            for pnum in _divisors(const):
                for cand in (Fraction(pnum, q), Fraction(-pnum, q)):
                    if _horner(desc, cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        roots.append(found)
        desc = _synthetic_div(desc, found)
        scale = 1
        for c in desc:
            scale = lcm(scale, c.denominator)
        desc = [c * scale for c in desc]
    return sorted(roots)
