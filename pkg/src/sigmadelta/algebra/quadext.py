"""Quadratic extensions ``F(s)`` with ``s**2 = d`` over F = Q or F = Q(x, t)."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import isqrt

from ..errors import DivisionByZero
from .poly import Poly, poly_gcd
from .ratfunc import RatFunc

_BASE = (int, Fraction, RatFunc, Poly)


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a rational, or None if it is not a square in Q."""
    q = Fraction(q)
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _poly_is_square_free(p: Poly) -> bool:
    for v in p.variables():
        if poly_gcd(p, p.diff(v)).is_constant():
            return True
    return False


@lru_cache(maxsize=None)
def _check_nonsquare(d) -> None:
    if isinstance(d, Fraction):
        if rational_sqrt(d) is not None:
            raise ValueError(f"{d} is a square in Q; no quadratic extension")
        return
    if d.is_constant():
        _check_nonsquare(d.constant_value())
        return
    p = d.num * d.den
    if any(p.degree(v) % 2 for v in p.variables()) or _poly_is_square_free(p):
        return
    raise ValueError(f"cannot certify that {d} is not a square")


class QuadExt:
    """``a + b*s`` with ``s**2 = d``; ``d`` is certified non-square on first use."""

    __slots__ = ("a", "b", "d", "_hash")

    def __init__(self, a, b=0, d=None):
        if d is None:
            raise ValueError("a discriminant is required")
        if isinstance(d, int):
            d = Fraction(d)
        if isinstance(d, Poly):
            d = RatFunc(d)
        if isinstance(d, RatFunc) and d.is_constant():
            d = d.constant_value()
        _check_nonsquare(d)
        self.d = d
        self.a = self._base(a)
        self.b = self._base(b)
        self._hash = None

    @classmethod
    def _raw(cls, a, b, d):
        obj = cls.__new__(cls)
        obj.a, obj.b, obj.d = a, b, d
        obj._hash = None
        return obj

    @property
    def base_tag(self) -> str:
        return "Q" if isinstance(self.d, Fraction) else "Q(x,t)"

    def _base(self, c):
        if isinstance(self.d, Fraction):
            if isinstance(c, int):
                return Fraction(c)
            if isinstance(c, Fraction):
                return c
            if isinstance(c, (RatFunc, Poly)) and c.is_constant():
                return Fraction(c.constant_value()) if isinstance(c, RatFunc) else c.constant_value()
            raise TypeError(f"{c!r} is not a rational number")
        if isinstance(c, RatFunc):
            return c
        if isinstance(c, (int, Fraction, Poly)):
            return RatFunc(c)
        raise TypeError(f"{c!r} is not an element of Q(x,t)")

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.d == self.d:
                return other
            if other.b == 0:
                return QuadExt._raw(self._base(other.a), self._base(0), self.d)
            if self.b == 0:
                return None
            raise ValueError(f"incompatible quadratic extensions: s^2={self.d} vs s^2={other.d}")
        if isinstance(other, _BASE):
            return QuadExt._raw(self._base(other), self._base(0), self.d)
        return None

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented if not isinstance(other, QuadExt) else other + self
        return QuadExt._raw(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt._raw(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented if not isinstance(other, QuadExt) else -(other - self)
        return QuadExt._raw(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented if not isinstance(other, QuadExt) else other * self
        a, b, c, e = self.a, self.b, o.a, o.b
        if b == 0 and e == 0:
            return QuadExt._raw(a * c, b, self.d)
        return QuadExt._raw(a * c + b * e * self.d, a * e + b * c, self.d)

    __rmul__ = __mul__

    def conj(self) -> "QuadExt":
        return QuadExt._raw(self.a, -self.b, self.d)

    def norm(self):
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if n == 0:
            raise DivisionByZero(f"{self} is not invertible")
        inv = 1 / n if not isinstance(n, int) else Fraction(1, n)
        return QuadExt._raw(self.a * inv, -self.b * inv, self.d)

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
            raise ValueError("integer exponent required")
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadExt._raw(self._base(1), self._base(0), self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, QuadExt) and other.d != self.d:
            return self.b == 0 and other.b == 0 and self.a == other.a
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.a) if self.b == 0 else hash((self.a, self.b, self.d))
        return self._hash

    def format(self, symbol: str | None = None) -> str:
        if symbol is None:
            symbol = "s" if isinstance(self.d, RatFunc) else f"sqrt({self.d})"
        if self.b == 0:
            return str(self.a)
        b = str(self.b)
        bpart = symbol if self.b == 1 else f"({b})*{symbol}"
        if self.a == 0:
            return bpart
        return f"{self.a} + {bpart}"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"QuadExt({self.format()!r})"


def sqrt_element(d) -> QuadExt:
    """The element ``s`` with ``s**2 = d``."""
    return QuadExt(0, 1, d)
