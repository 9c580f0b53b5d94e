import sympy

from virtcone.poly import PolyRing, Polynomial, parse_poly
from virtcone.rationals import Q


def ring(*names, **kw):
    return PolyRing(tuple(names), **kw)


def p(r, text):
    return parse_poly(text, r)


def to_sympy(poly: Polynomial, syms):
    expr = sympy.Integer(0)
    for m, c in poly.terms.items():
        term = sympy.Rational(str(c))
        for s, e in zip(syms, m):
            if e:
                term *= s ** e
        expr += term
    return sympy.expand(expr)


def sympy_syms(r: PolyRing):
    return sympy.symbols(" ".join(r.names), seq=True)


def sympy_groebner(polys, r: PolyRing, order="grevlex"):
    syms = sympy_syms(r)
    exprs = [to_sympy(g, syms) for g in polys if g]
    return sympy.groebner(exprs, *syms, order=order)


def in_ideal_oracle(poly, generators, r: PolyRing) -> bool:
    """Independent membership test via sympy's Groebner reduction."""
    syms = sympy_syms(r)
    gb = sympy_groebner(generators, r)
    return gb.reduce(to_sympy(poly, syms))[1] == 0
