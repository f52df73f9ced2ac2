"""Conversion between PolyScalar and sympy expressions (factorisation only)."""
from __future__ import annotations

from fractions import Fraction

import sympy

from .scalars import PolyScalar


def to_sympy(p: PolyScalar) -> sympy.Expr:
    expr = sympy.Integer(0)
    for m, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for name, k in m:
            term *= sympy.Symbol(name) ** k
        expr += term
    return expr


def from_sympy(expr) -> PolyScalar:
    expr = sympy.expand(expr)
    symbols = sorted(expr.free_symbols, key=lambda s: s.name)
    if not symbols:
        if not expr.is_Rational:
            raise ValueError(f"{expr} is not rational")
        return PolyScalar.const(Fraction(int(expr.p), int(expr.q)))
    poly = sympy.Poly(expr, *symbols)
    if not poly.domain.is_QQ and not poly.domain.is_ZZ:
        raise ValueError(f"{expr} does not have rational coefficients")
    terms = {}
    for powers, c in poly.terms():
        mono = tuple((s.name, k) for s, k in zip(symbols, powers) if k)
        terms[mono] = Fraction(int(c.p), int(c.q))
    return PolyScalar(terms)
