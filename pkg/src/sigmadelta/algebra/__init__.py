"""Exact arithmetic: polynomials, rational functions, quadratic extensions, the eta tower, matrices."""

from .laurent import LaurentPoly
from .matrix import Matrix, det_inv_adjugate, invert_scalar
from .poly import Poly, poly_gcd, poly_lcm, rational_roots
from .quadext import QuadExt, rational_sqrt, sqrt_element
from .ratfunc import RatFunc, T, X, normalize
from .tower import DISCRIMINANT, ETA, S, TowerElem, is_laurent_unit, tower, tower_arith

rational_root_find = rational_roots

__all__ = [
    "DISCRIMINANT", "ETA", "LaurentPoly", "Matrix", "Poly", "QuadExt", "RatFunc", "S", "T",
    "TowerElem", "X", "det_inv_adjugate", "invert_scalar", "is_laurent_unit", "normalize",
    "poly_gcd", "poly_lcm", "rational_root_find", "rational_roots", "rational_sqrt",
    "sqrt_element", "tower", "tower_arith",
]
