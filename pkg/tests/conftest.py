import sympy
from hypothesis import strategies as st

from linkinv.laurent import LaurentPoly

SYM_S = sympy.Symbol("s")


def to_sympy(p: LaurentPoly):
    return sum((c * SYM_S ** e for e, c in p.items()), sympy.Integer(0))


def from_sympy(expr) -> LaurentPoly:
    expr = sympy.expand(expr)
    if expr == 0:
        return LaurentPoly()
    coeffs = {}
    for term in sympy.Add.make_args(expr):
        c, rest = term.as_coeff_Mul()
        e = 0 if rest == 1 else sympy.degree(rest * SYM_S ** 100, SYM_S) - 100
        coeffs[int(e)] = coeffs.get(int(e), 0) + int(c)
    return LaurentPoly(coeffs)


def sympy_gf2_divide(num, den, pad=80):
    """Quotient of Laurent polynomials over GF(2) via sympy, or None if inexact."""
    n = sympy.Poly(sympy.expand(to_sympy(num.lift()) * SYM_S ** (2 * pad)), SYM_S, modulus=2)
    d = sympy.Poly(sympy.expand(to_sympy(den.lift()) * SYM_S ** pad), SYM_S, modulus=2)
    q, r = sympy.div(n, d)
    if not r.is_zero:
        return None
    return from_sympy(q.as_expr() / SYM_S ** pad).reduce_mod2()


def laurent_polys(lo=-8, hi=8, cmax=9):
    return st.dictionaries(st.integers(lo, hi), st.integers(-cmax, cmax), max_size=hi - lo + 1).map(LaurentPoly)


def gf2_polys(lo=-8, hi=8):
    return st.sets(st.integers(lo, hi)).map(LaurentPoly.gf2)
