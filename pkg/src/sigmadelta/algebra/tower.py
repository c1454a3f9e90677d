"""The tower ``Q(x,t)(s)[eta, 1/eta]`` with ``s**2 = t**2 - 1``.

``eta`` stands for ``(t + s)**(x - 1)``; the operators module gives it the
actions ``sigma(eta) = (t + s)*eta`` and ``delta(eta) = (x - 1)*eta/s``.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import NotAUnit
from .laurent import LaurentPoly
from .poly import Poly
from .quadext import QuadExt
from .ratfunc import RatFunc, T

DISCRIMINANT = T * T - 1


class TowerElem(LaurentPoly):
    __slots__ = ()

    def __init__(self, terms=None):
        super().__init__(("eta",), terms)

    @staticmethod
    def _coerce_coeff(c):
        if isinstance(c, QuadExt):
            if c.d != DISCRIMINANT:
                if c.b == 0:
                    return QuadExt(c.a, 0, DISCRIMINANT)
                raise TypeError(f"coefficient {c} lives in a different quadratic extension")
            return c
        if isinstance(c, (int, Fraction, RatFunc, Poly)):
            return QuadExt(c, 0, DISCRIMINANT)
        raise TypeError(f"cannot use {type(c).__name__} as a tower coefficient")

    @classmethod
    def from_coeffs(cls, coeffs) -> "TowerElem":
        """Build from a map ``power of eta -> coefficient``."""
        return cls({(k,): c for k, c in coeffs.items()})

    def coeff(self, k: int) -> QuadExt:
        return self._terms.get((k,), QuadExt(0, 0, DISCRIMINANT))

    def powers(self):
        return sorted(e[0] for e in self._terms)

    def inverse(self) -> "TowerElem":
        if not self.is_unit():
            raise NotAUnit(f"{self} is not of the form c*eta^k with c != 0")
        return super().inverse()

    def format(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k in self.powers():
            c = self._terms[(k,)]
            cs = c.format("s")
            if k == 0:
                parts.append(f"({cs})")
            else:
                mono = "eta" if k == 1 else f"eta^{k}" if k > 0 else f"eta^({k})"
                parts.append(mono if c == 1 else f"({cs})*{mono}")
        return " + ".join(parts)


S = QuadExt(0, 1, DISCRIMINANT)
ETA = TowerElem({(1,): 1})


def tower(c) -> TowerElem:
    """Embed a scalar of Q(x,t)(s) into the tower."""
    return TowerElem({(0,): c})


def is_laurent_unit(a: TowerElem) -> bool:
    return a.is_unit()


def tower_arith(a: TowerElem, b: TowerElem | None, op: str) -> TowerElem:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    raise ValueError(f"unknown tower operation {op!r}")
