"""Small dense matrices over any of the exact rings in this package."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Callable, Iterable, List, Sequence

from ..errors import NotAUnit, ShapeError


def _perm_sign(p: Sequence[int]) -> int:
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


class Matrix:
    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(_lift(v) for v in r) for r in rows)
        if not rows:
            raise ShapeError("a matrix needs at least one row")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ShapeError("rows have different lengths")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "Matrix":
        return cls([[Fraction(0)] * (n if m is None else m) for _ in range(n)])

    @classmethod
    def diag(cls, *entries) -> "Matrix":
        n = len(entries)
        return cls([[entries[i] if i == j else Fraction(0) for j in range(n)] for i in range(n)])

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entries(self):
        for r in self.rows:
            yield from r

    def map(self, f: Callable) -> "Matrix":
        return Matrix([[f(v) for v in r] for r in self.rows])

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.rows))

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.entries())

    def _check_same(self, other: "Matrix"):
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same(other)
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same(other)
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return self.map(lambda v: -v)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
            cols = list(zip(*other.rows))
            out = []
            for r in self.rows:
                row = []
                for c in cols:
                    acc = 0
                    for a, b in zip(r, c):
                        if a == 0 or b == 0:
                            continue
                        acc = a * b + acc
                    row.append(acc)
                out.append(row)
            return Matrix(out)
        return self.map(lambda v: v * other)

    def __rmul__(self, other):
        return self.map(lambda v: other * v)

    def __pow__(self, n: int) -> "Matrix":
        if not self.is_square():
            raise ShapeError("matrix powers need a square matrix")
        if n < 0:
            inv = self.inverse()
            if inv is None:
                raise NotAUnit("singular matrix has no negative powers")
            return inv ** (-n)
        result = Matrix.identity(self.nrows)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for a, b in zip(self.entries(), other.entries())
        )

    def __hash__(self):
        return hash(self.rows)

    # -- determinants -----------------------------------------------------
    def minor(self, i: int, j: int) -> "Matrix":
        return Matrix([r[:j] + r[j + 1:] for k, r in enumerate(self.rows) if k != i])

    def det(self):
        if not self.is_square():
            raise ShapeError(f"determinant of a non-square {self.shape} matrix")
        n = self.nrows
        if n == 1:
            return self.rows[0][0]
        if n > 2 and _all_ratfunc(self.rows):
            return _det_ratfunc(self.rows)
        if n == 2:
            (a, b), (c, d) = self.rows
            return a * d - b * c
        if n <= 5:
            return _det_permutations(self.rows)
        return _det_laplace(self)

    def adjugate(self) -> "Matrix":
        if not self.is_square():
            raise ShapeError(f"adjugate of a non-square {self.shape} matrix")
        n = self.nrows
        if n == 1:
            return Matrix([[Fraction(1)]])
        return Matrix(
            [[(-1) ** (i + j) * self.minor(j, i).det() for j in range(n)] for i in range(n)]
        )

    def inverse(self) -> "Matrix | None":
        """Inverse, or None when the determinant is not a unit."""
        d = self.det()
        inv = invert_scalar(d)
        if inv is None:
            return None
        return self.adjugate() * inv

    def format(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(v) for v in r) + "]" for r in self.rows) + "]"

    def tolist(self) -> List[List]:
        return [list(r) for r in self.rows]

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Matrix({self.format()})"


def _lift(v):
    return Fraction(v) if isinstance(v, int) else v


def _det_permutations(rows):
    n = len(rows)
    total = 0
    for p in permutations(range(n)):
        term = None
        for i, j in enumerate(p):
            v = rows[i][j]
            if v == 0:
                term = None
                break
            term = v if term is None else term * v
        else:
            if term is not None:
                total = (term if _perm_sign(p) > 0 else -term) + total
    return total


def _all_ratfunc(rows) -> bool:
    from .ratfunc import RatFunc

    return all(isinstance(v, RatFunc) for r in rows for v in r)


def _det_ratfunc(rows):
    """Clear each row's denominators, take a polynomial determinant, divide once.

    The denominator is kept as a list of the small entry denominators so the
    final cancellation only ever takes gcds against small polynomials.
    """
    from .poly import poly_gcd
    from .ratfunc import RatFunc

    prows = []
    factors = []
    for r in rows:
        dens = []
        for v in r:
            if not v.den.is_constant() and v.den not in dens:
                dens.append(v.den)
        mult = None
        for d in dens:
            mult = d if mult is None else mult * d
        if mult is None:
            prows.append([v.num * (1 / v.den.constant_value()) for v in r])
        else:
            prows.append([v.num * mult.divexact(v.den) for v in r])
        factors.extend(dens)
    n = len(rows)
    num = _det_permutations(prows) if n <= 5 else _det_laplace(Matrix(prows))
    if isinstance(num, int) or num == 0:
        return RatFunc.const(0)
    den = num.one()
    for d in factors:
        g = poly_gcd(num, d)
        while not g.is_constant():
            num = num.divexact(g)
            d = d.divexact(g)
            g = poly_gcd(num, d)
        den = den * d
    return RatFunc._coprime(num, den)


def _det_laplace(m: Matrix):
    total = 0
    for j, v in enumerate(m.rows[0]):
        if v == 0:
            continue
        term = v * m.minor(0, j).det()
        total = (term if j % 2 == 0 else -term) + total
    return total


def invert_scalar(d):
    """Multiplicative inverse of a ring element, or None if it is zero or not a unit."""
    if d == 0:
        return None
    if isinstance(d, int):
        return Fraction(1, d)
    if isinstance(d, Fraction):
        return 1 / d
    try:
        return d.inverse()
    except (NotAUnit, ZeroDivisionError):
        return None


def det_inv_adjugate(m: Matrix):
    """Return ``(det, inverse or None, adjugate)`` for a square matrix."""
    if not m.is_square():
        raise ShapeError(f"expected a square matrix, got {m.shape}")
    d = m.det()
    adj = m.adjugate()
    inv = invert_scalar(d)
    return d, (adj * inv if inv is not None else None), adj
