"""The Chebyshev system and its explicit solutions.

With h = 1 - t^2 the system reads

    A = [[0, 1], [-1, 2t]],
    B = 1/h * [[(x-1) t, -(x-1)], [x, -x t]],

and a fundamental matrix in the eta tower is W = U * diag(eta^-1, (t+s) eta)
with U = [[t+s, t-s], [1, 1]].
"""

from __future__ import annotations

from .algebra.matrix import Matrix
from .algebra.quadext import QuadExt
from .algebra.ratfunc import RatFunc
from .algebra.tower import DISCRIMINANT, ETA, S, tower
from .systems import SigmaDeltaSystem

x = RatFunc.var("x")
t = RatFunc.var("t")
H = 1 - t * t


def chebyshev_A() -> Matrix:
    return Matrix([[0, 1], [-1, 2 * t]])


def chebyshev_B() -> Matrix:
    return Matrix([
        [(x - 1) * t / H, -(x - 1) / H],
        [x / H, -x * t / H],
    ])


def chebyshev_system() -> SigmaDeltaSystem:
    return SigmaDeltaSystem(chebyshev_A(), chebyshev_B(), H.num)


def diagonalizer() -> Matrix:
    """U with U^-1 A U = d; its columns are eigenvectors of A."""
    return Matrix([[t + S, t - S], [QuadExt(1, 0, DISCRIMINANT), QuadExt(1, 0, DISCRIMINANT)]])


def eigenvalues() -> Matrix:
    """d = diag(t - s, t + s)."""
    return Matrix.diag(t - S, t + S)


def tower_solution() -> Matrix:
    """W with sigma(W) = A W and delta(W) = B W, entries in the eta tower."""
    inv = ETA.inverse()
    return Matrix([
        [inv, ETA],
        [tower(t - S) * inv, tower(t + S) * ETA],
    ])
