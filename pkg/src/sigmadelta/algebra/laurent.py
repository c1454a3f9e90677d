"""Sparse Laurent polynomials with arbitrary coefficients.

Each generator may carry a modulus ``q``, meaning the relation ``g**q = 1``;
exponents are then reduced mod q. This gives both the tower ring
``K[eta, 1/eta]`` and the symbolic parameter rings ``Q[xi, 1/xi]/(xi**q - 1)``
used for group templates.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple

from ..errors import NotAUnit

Exponent = Tuple[int, ...]


class LaurentPoly:
    __slots__ = ("gens", "moduli", "_terms", "_hash")

    def __init__(self, gens: Iterable[str], terms: Mapping | None = None, moduli=None):
        self.gens = tuple(gens)
        n = len(self.gens)
        self.moduli = tuple(moduli) if moduli is not None else (None,) * n
        clean: Dict[Exponent, object] = {}
        for exp, c in (terms or {}).items():
            exp = self._reduce(tuple(exp))
            c = self._coerce_coeff(c)
            if exp in clean:
                c = clean[exp] + c
            if c == 0:
                clean.pop(exp, None)
            else:
                clean[exp] = c
        self._terms = clean
        self._hash = None

    def _new(self, terms: Dict[Exponent, object]):
        obj = type(self).__new__(type(self))
        obj.gens = self.gens
        obj.moduli = self.moduli
        obj._terms = terms
        obj._hash = None
        return obj

    def _normalized(self):
        """Drop coefficients that became zero after an entrywise map."""
        if all(c != 0 for c in self._terms.values()):
            return self
        return self._new({e: c for e, c in self._terms.items() if c != 0})

    def _reduce(self, exp: Exponent) -> Exponent:
        if len(exp) != len(self.gens):
            raise ValueError(f"exponent {exp} does not match generators {self.gens}")
        return tuple(e % q if q else e for e, q in zip(exp, self.moduli))

    @staticmethod
    def _coerce_coeff(c):
        if isinstance(c, int):
            return Fraction(c)
        return c

    # -- constructors ---------------------------------------------------
    def constant(self, c):
        c = self._coerce_coeff(c)
        if c == 0:
            return self._new({})
        return self._new({(0,) * len(self.gens): c})

    def monomial(self, exp: Exponent, c=1):
        c = self._coerce_coeff(c)
        if c == 0:
            return self._new({})
        return self._new({self._reduce(tuple(exp)): c})

    def generator(self, name: str, power: int = 1):
        exp = [0] * len(self.gens)
        exp[self.gens.index(name)] = power
        return self.monomial(tuple(exp))

    # -- inspection -----------------------------------------------------
    @property
    def terms(self) -> Dict[Exponent, object]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def support(self):
        return sorted(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        """True for ``c * g**k`` with ``c`` invertible (the units of a Laurent ring over a field)."""
        if len(self._terms) != 1:
            return False
        (c,) = self._terms.values()
        try:
            _invert(c)
        except (ZeroDivisionError, NotAUnit, ArithmeticError):
            return False
        return True

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def constant_value(self):
        return self._terms.get((0,) * len(self.gens), self._coerce_coeff(0))

    # -- arithmetic -----------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.gens != self.gens or other.moduli != self.moduli:
                if other.is_constant():
                    return self.constant(other.constant_value())
                raise ValueError(
                    f"Laurent rings differ: {self.gens}/{self.moduli} vs {other.gens}/{other.moduli}"
                )
            return other
        try:
            return self.constant(other)
        except TypeError:
            return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self._terms)
        for e, c in o._terms.items():
            v = terms[e] + c if e in terms else c
            if v == 0:
                terms.pop(e, None)
            else:
                terms[e] = v
        return self._new(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms: Dict[Exponent, object] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                e = self._reduce(tuple(a + b for a, b in zip(e1, e2)))
                p = c1 * c2
                v = terms[e] + p if e in terms else p
                if v == 0:
                    terms.pop(e, None)
                else:
                    terms[e] = v
        return self._new(terms)

    def __rmul__(self, other):
        return self * other

    def inverse(self):
        if not self.is_unit():
            raise NotAUnit(f"{self} is not a unit of the Laurent ring")
        ((e, c),) = self._terms.items()
        return self._new({self._reduce(tuple(-a for a in e)): _invert(c)})

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
        result = self.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, LaurentPoly) and (
            other.gens != self.gens or other.moduli != self.moduli
        ):
            return self.is_constant() and other.is_constant() and (
                self.constant_value() == other.constant_value()
            )
        try:
            o = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash((self.gens, self.moduli, frozenset(self._terms.items())))
        return self._hash

    # -- maps -----------------------------------------------------------
    def map_coeffs(self, f):
        terms = {}
        for e, c in self._terms.items():
            v = f(c)
            if v != 0:
                terms[e] = v
        return self._new(terms)

    def evaluate(self, values: Mapping[str, object]):
        """Substitute ring elements for every generator (negative powers need units)."""
        result = 0
        for e, c in self._terms.items():
            term = c
            for g, k in zip(self.gens, e):
                if k:
                    term = term * values[g] ** k
            result = term + result
        return result

    def format(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms):
            c = self._terms[e]
            mono = "*".join(
                g if k == 1 else f"{g}^{k}" if k > 0 else f"{g}^({k})"
                for g, k in zip(self.gens, e) if k
            )
            cs = str(c)
            if not mono:
                parts.append(cs)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"({cs})*{mono}")
        return " + ".join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"{type(self).__name__}({self.format()!r})"


def _invert(c):
    if isinstance(c, int):
        if c == 0:
            raise ZeroDivisionError("zero coefficient")
        return Fraction(1, c)
    if isinstance(c, Fraction):
        return 1 / c
    if hasattr(c, "inverse"):
        return c.inverse()
    return 1 / c
