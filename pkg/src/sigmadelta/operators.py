"""The shift sigma (x -> x+1) and the derivation delta = d/dt on every ring of the package.

On the tower, sigma(eta) = (t+s)*eta and delta(eta) = (x-1)*eta/s, where
s**2 = t**2 - 1 gives delta(s) = t/s. Both operators act entrywise on matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List

from .algebra.matrix import Matrix
from .algebra.poly import Poly
from .algebra.quadext import QuadExt
from .algebra.ratfunc import RatFunc
from .algebra.tower import DISCRIMINANT, S, TowerElem


@dataclass(frozen=True, order=True)
class ThetaWord:
    """The operator sigma**sigma_power * delta**delta_power."""

    sigma_power: int = 0
    delta_power: int = 0

    def __post_init__(self):
        if self.sigma_power < 0 or self.delta_power < 0:
            raise ValueError("theta words have nonnegative powers")

    @property
    def length(self) -> int:
        return self.sigma_power + self.delta_power

    def is_identity(self) -> bool:
        return self.sigma_power == 0 and self.delta_power == 0

    def as_tuple(self):
        return (self.sigma_power, self.delta_power)

    def __str__(self):
        parts = []
        if self.sigma_power:
            parts.append("sigma" if self.sigma_power == 1 else f"sigma^{self.sigma_power}")
        if self.delta_power:
            parts.append("delta" if self.delta_power == 1 else f"delta^{self.delta_power}")
        return "*".join(parts) or "1"


IDENTITY = ThetaWord(0, 0)


def enumerate_theta(L: int) -> List[ThetaWord]:
    """All words of length <= L, shortest first, then by sigma power."""
    if L < 0:
        raise ValueError("bound must be nonnegative")
    return [ThetaWord(i, n - i) for n in range(L + 1) for i in range(n + 1)]


# -- sigma -------------------------------------------------------------------

def _shift(f, k: int):
    if isinstance(f, (int, Fraction)):
        return f
    if isinstance(f, RatFunc):
        return f.shift("x", k)
    if isinstance(f, Poly):
        return f.shift("x", k) if "x" in f.gens else f
    if isinstance(f, QuadExt):
        if isinstance(f.d, Fraction):
            return f
        if "x" in f.d.variables():
            raise ValueError("sigma is only implemented when s**2 does not involve x")
        return QuadExt._raw(f.a.shift("x", k), f.b.shift("x", k), f.d)
    if isinstance(f, TowerElem):
        step = _eta_factor(k)
        return f._new(
            {e: _shift(c, k) * step ** e[0] for e, c in f._terms.items()}
        )._normalized()
    if isinstance(f, Matrix):
        return f.map(lambda v: _shift(v, k))
    if hasattr(f, "sigma"):
        if k < 0:
            raise ValueError(f"{type(f).__name__} has no inverse shift")
        for _ in range(k):
            f = f.sigma()
        return f
    raise TypeError(f"sigma is not defined on {type(f).__name__}")


def _eta_factor(k: int) -> QuadExt:
    # sigma**k(eta) = (t+s)**k * eta, and (t+s)**-1 = t-s
    base = S + RatFunc.var("t") if k >= 0 else RatFunc.var("t") - S
    return base ** abs(k)


def apply_sigma(f):
    return _shift(f, 1)


def apply_sigma_inverse(f):
    return _shift(f, -1)


# -- delta -------------------------------------------------------------------

def _delta_base(c):
    if isinstance(c, (int, Fraction)):
        return Fraction(0)
    if isinstance(c, RatFunc):
        return c.diff("t")
    if isinstance(c, Poly):
        return c.diff("t") if "t" in c.gens else c.zero()
    raise TypeError(f"delta is not defined on {type(c).__name__}")


def _delta_quad(f: QuadExt) -> QuadExt:
    if isinstance(f.d, Fraction):
        return QuadExt._raw(Fraction(0), Fraction(0), f.d)
    # delta(s) = delta(d)/(2s) = delta(d)/(2d) * s
    ds = f.d.diff("t") / (2 * f.d)
    return QuadExt._raw(f.a.diff("t"), f.b.diff("t") + f.b * ds, f.d)


# delta(eta)/eta = (x-1)/s = (x-1)/(t^2-1) * s
_ETA_LOG_DERIV = QuadExt(0, (RatFunc.var("x") - 1) / DISCRIMINANT, DISCRIMINANT)


def apply_delta(f):
    if isinstance(f, QuadExt):
        return _delta_quad(f)
    if isinstance(f, TowerElem):
        terms = {}
        for e, c in f._terms.items():
            v = _delta_quad(c)
            if e[0]:
                v = v + c * _ETA_LOG_DERIV * e[0]
            terms[e] = v
        return f._new(terms)._normalized()
    if isinstance(f, Matrix):
        return f.map(apply_delta)
    if hasattr(f, "delta"):
        return f.delta()
    return _delta_base(f)


def apply_theta(w: ThetaWord, f):
    out = _shift(f, w.sigma_power) if w.sigma_power else f
    for _ in range(w.delta_power):
        out = apply_delta(out)
    return out
