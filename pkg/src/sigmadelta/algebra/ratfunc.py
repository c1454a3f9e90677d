"""Rational functions over Q in the shift variable ``x`` and the differential variable ``t``."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from ..errors import DivisionByZero
from .poly import Poly, poly_gcd

GENS = ("x", "t")


class RatFunc:
    """A reduced quotient ``num/den`` with ``den`` monic under grlex."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=1, gens: Iterable[str] = GENS):
        gens = tuple(gens)
        num = _as_poly(num, gens)
        den = _as_poly(den, num.gens)
        if den.gens != num.gens:
            if den.is_constant():
                den = Poly.constant(num.gens, den.constant_value())
            elif num.is_constant():
                num = Poly.constant(den.gens, num.constant_value())
            else:
                raise ValueError("numerator and denominator use different generators")
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = num, Poly.constant(num.gens, 1)
        else:
            g = poly_gcd(num, den)
            if not g.is_constant():
                num = num.divexact(g)
                den = den.divexact(g)
            self.num, self.den = _fix_lead(num, den)
        self._hash = None

    @classmethod
    def _coprime(cls, num: Poly, den: Poly) -> "RatFunc":
        obj = cls.__new__(cls)
        if num.is_zero():
            obj.num, obj.den = num, num.one()
        else:
            obj.num, obj.den = _fix_lead(num, den)
        obj._hash = None
        return obj

    @classmethod
    def var(cls, name: str, gens: Iterable[str] = GENS) -> "RatFunc":
        p = Poly.var(gens, name)
        return cls._coprime(p, p.one())

    @classmethod
    def const(cls, c, gens: Iterable[str] = GENS) -> "RatFunc":
        p = Poly.constant(gens, c)
        return cls._coprime(p, Poly.constant(gens, 1))

    @property
    def gens(self):
        return self.num.gens

    # -- predicates -----------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.num.constant_value() / self.den.constant_value()

    def variables(self):
        used = set(self.num.variables()) | set(self.den.variables())
        return [g for g in self.gens if g in used]

    def __bool__(self):
        return not self.num.is_zero()

    # -- arithmetic -----------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(other, self.gens)
        if isinstance(other, Poly):
            return RatFunc._coprime(other, other.one())
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            return self
        if self.is_zero():
            return o
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        if self.den.is_constant() and o.den.is_constant():
            return RatFunc._coprime(
                self.num * o.den.constant_value() + o.num * self.den.constant_value(),
                self.den * o.den.constant_value(),
            )
        g = poly_gcd(self.den, o.den)
        d1 = o.den.divexact(g)
        d2 = self.den.divexact(g)
        return RatFunc(self.num * d1 + o.num * d2, self.den * d1)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._coprime(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return RatFunc.const(0, self.gens)
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        num = self.num.divexact(g1) * o.num.divexact(g2)
        den = self.den.divexact(g2) * o.den.divexact(g1)
        return RatFunc._coprime(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise DivisionByZero("inverse of the zero rational function")
        return RatFunc._coprime(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise ValueError("rational function powers need an integer exponent")
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc._coprime(self.num ** n, self.den ** n)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash((self.num, self.den))
        return self._hash

    # -- operators on the function ----------------------------------------
    def diff(self, name: str) -> "RatFunc":
        dn = self.num.diff(name)
        dd = self.den.diff(name)
        if dd.is_zero():
            return RatFunc(dn, self.den)
        return RatFunc(dn * self.den - self.num * dd, self.den * self.den)

    def shift(self, name: str, c) -> "RatFunc":
        return RatFunc._coprime(self.num.shift(name, c), self.den.shift(name, c))

    def subs(self, values: Mapping[str, object]) -> "RatFunc":
        """Substitute rational values; raises ``DivisionByZero`` if the denominator vanishes."""
        den = self.den.subs(values)
        if den.is_zero():
            raise DivisionByZero(
                f"denominator {self.den} vanishes at "
                + ", ".join(f"{k}={v}" for k, v in values.items())
            )
        return RatFunc(self.num.subs(values), den)

    def format(self, names=None) -> str:
        n = self.num.format(names)
        if self.den == 1:
            return n
        d = self.den.format(names)
        if len(self.num.terms) > 1:
            n = f"({n})"
        return f"{n}/({d})"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"RatFunc({self.format()!r})"


def _as_poly(p, gens) -> Poly:
    if isinstance(p, Poly):
        return p
    if isinstance(p, (int, Fraction)):
        return Poly.constant(gens, p)
    raise TypeError(f"cannot build a polynomial from {type(p).__name__}")


def _fix_lead(num: Poly, den: Poly):
    _, lc = den.lead()
    if lc != 1:
        inv = 1 / lc
        return num * inv, den * inv
    return num, den


def normalize(f: RatFunc) -> RatFunc:
    """Canonical reduced form; the constructor already keeps every value canonical."""
    return RatFunc(f.num, f.den)


X = RatFunc.var("x")
T = RatFunc.var("t")
