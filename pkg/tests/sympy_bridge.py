"""Conversions into sympy, used only as an independent oracle."""

import sympy

sx, st_ = sympy.symbols("x t")
SYMS = {"x": sx, "t": st_}


def poly_to_sympy(p):
    out = sympy.Integer(0)
    for exp, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for g, k in zip(p.gens, exp):
            term *= SYMS.get(g, sympy.Symbol(g)) ** k
        out += term
    return out


def ratfunc_to_sympy(f):
    return poly_to_sympy(f.num) / poly_to_sympy(f.den)
