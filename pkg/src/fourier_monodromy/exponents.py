"""Indicial polynomials, characteristic exponents and monodromy at infinity.

Two singularity configurations are supported for the monodromy along a large
counterclockwise circle:

(a) infinity is a regular singular point. An exponent ``x`` there (solutions
    ``u^x = z^-x``) contributes the eigenvalue ``e(-x)``.
(b) the leading coefficient is ``c*z^k``, so only 0 and infinity are singular,
    and 0 is regular singular. The big circle is homotopic to a small loop
    around 0 and an exponent ``x`` at 0 contributes ``e(x)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Mapping, Sequence

import mpmath
import numpy as np
from scipy.optimize import linear_sum_assignment

from .newton import INFINITY, as_point, is_moderate_at_infinity, is_regular, localize
from .scalars import ClassMultiset, ExpClass, ExponentQ, PolyScalar, as_fraction
from .weyl import WeylOp, fourier


class ExactRootFailure(ArithmeticError):
    """The exact pipeline could not certify a full linear factorisation."""


class UnsupportedConfiguration(ValueError):
    pass


class NotModerate(ValueError):
    pass


@dataclass(frozen=True)
class Numeric:
    """Numeric evaluation mode: parameter values (exact or float) and a tolerance."""

    assignment: Mapping = field(default_factory=dict)
    tol: float = 1e-9


EXACT = "exact"


# ---------------------------------------------------------------- s-polynomials
# Univariate polynomials in s are tuples of PolyScalar, index = power.


def _poly_trim(c: list) -> tuple:
    c = list(c)
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def _poly_mul(a: Sequence, b: Sequence) -> tuple:
    if not a or not b:
        return ()
    out = [PolyScalar()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return _poly_trim(out)


def _falling(k: int) -> tuple:
    """Coefficients of ``s(s-1)...(s-k+1)``."""
    p: tuple = (PolyScalar.const(1),)
    for i in range(k):
        p = _poly_mul(p, (PolyScalar.const(-i), PolyScalar.const(1)))
    return p


def poly_from_roots(lead: PolyScalar, roots: Sequence[ExponentQ]) -> tuple:
    p: tuple = (lead,)
    for r in roots:
        p = _poly_mul(p, (-r.to_poly(), PolyScalar.const(1)))
    return p


@dataclass(frozen=True)
class IndicialPoly:
    coefficients: tuple  # PolyScalar, index = power of s
    at: object
    roots: tuple | None = None  # ExponentQ when known by construction

    def degree(self) -> int:
        return len(self.coefficients) - 1

    def leading(self) -> PolyScalar:
        return self.coefficients[-1]

    def parameters(self) -> frozenset:
        out = frozenset()
        for c in self.coefficients:
            out |= c.parameters()
        return out

    def substitute(self, assignment: Mapping) -> "IndicialPoly":
        return IndicialPoly(
            _poly_trim([c.substitute(assignment) for c in self.coefficients]), self.at
        )

    def __str__(self):
        terms = []
        for k in range(self.degree(), -1, -1):
            c = self.coefficients[k]
            if not c:
                continue
            s = "" if k == 0 else ("s" if k == 1 else f"s^{k}")
            cs = str(c)
            if len(c.terms) > 1:
                cs = f"({cs})"
            if s and cs == "1":
                terms.append(s)
            elif s and cs == "-1":
                terms.append("-" + s)
            else:
                terms.append(cs + ("*" + s if s else ""))
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def indicial_polynomial(P: WeylOp, at) -> IndicialPoly:
    """``b(s) = sum_k [u^(k+rho)] a_k(u) * s(s-1)...(s-k+1)`` with ``rho = min(ord a_k - k)``."""
    if P.is_zero():
        raise ValueError("indicial polynomial of the zero operator")
    L = localize(P, at)
    rho = min(L.valuation(k) - k for k in L.coefficients)
    b: list = []
    for k, a in L.coefficients.items():
        c = a.get(k + rho)
        if c is None:
            continue
        f = _falling(k)
        if len(b) < len(f):
            b.extend([PolyScalar()] * (len(f) - len(b)))
        for i, fi in enumerate(f):
            b[i] = b[i] + c * fi
    poly = _poly_trim(b)
    roots = P.indicial_hints.get(as_point(at))
    if roots is not None:
        # construction data is only trusted once it re-expands to b(s)
        if len(roots) != len(poly) - 1 or poly_from_roots(poly[-1], roots) != poly:
            roots = None
    return IndicialPoly(poly, L.at, tuple(roots) if roots is not None else None)


# ---------------------------------------------------------------- exact roots


def _rational_roots(coeffs: Sequence[Fraction]) -> list:
    """All roots of a rational polynomial, or ExactRootFailure if one is irrational."""
    from sympy import divisors

    c = [as_fraction(x) for x in coeffs]
    roots: list = []
    while len(c) > 1 and c[0] == 0:
        roots.append(Fraction(0))
        c = c[1:]
    while len(c) > 1:
        den = lcm(*(x.denominator for x in c))
        ints = [int(x * den) for x in c]
        a0, an = ints[0], ints[-1]
        found = None
        for q in divisors(abs(an)):
            for p in divisors(abs(a0)):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if _horner(c, cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            raise ExactRootFailure(f"irrational roots remain in degree-{len(c) - 1} factor")
        roots.append(found)
        c = _deflate(c, found)
    return roots


def _horner(c: Sequence, x):
    acc = 0
    for a in reversed(c):
        acc = acc * x + a
    return acc


def _deflate(c: Sequence[Fraction], r: Fraction) -> list:
    """Divide by ``(s - r)``; coefficients low to high."""
    n = len(c) - 1
    q = [Fraction(0)] * n
    acc = Fraction(0)
    for i in range(n, 0, -1):
        acc = acc * r + c[i]
        q[i - 1] = acc
    return q


def _quadratic_roots(b: IndicialPoly) -> list:
    c0, c1, c2 = b.coefficients
    disc = c1 * c1 - c0 * c2.scale(4)
    root = disc.sqrt()
    if root is None:
        raise ExactRootFailure("discriminant is not a perfect square")
    if not c2.is_constant():
        raise ExactRootFailure("leading coefficient is not a rational constant")
    inv = 1 / (2 * c2.constant_value())
    out = []
    for r in ((-c1 + root).scale(inv), (-c1 - root).scale(inv)):
        try:
            out.append(r.as_exponent())
        except ValueError:
            raise ExactRootFailure(f"root {r} is not affine in the parameters") from None
    return out


def _factored_roots(b: IndicialPoly) -> list:
    """Multivariate factorisation over Q; every factor must be linear in s."""
    import sympy

    from ._sympy import from_sympy, to_sympy

    s = sympy.Symbol("s_")
    expr = sum(to_sympy(c) * s ** k for k, c in enumerate(b.coefficients))
    _, factors = sympy.factor_list(expr)
    roots = []
    for f, mult in factors:
        if s not in f.free_symbols:
            continue
        poly = sympy.Poly(f, s)
        if poly.degree() != 1:
            raise ExactRootFailure(f"factor {f} has degree {poly.degree()} in s")
        a1, a0 = poly.all_coeffs()
        if a1.free_symbols:
            raise ExactRootFailure(f"factor {f} has a parameter-dependent s-coefficient")
        try:
            r = from_sympy(-a0 / a1).as_exponent()
        except ValueError:
            raise ExactRootFailure(f"root of {f} is not affine in the parameters") from None
        roots.extend([r] * mult)
    if len(roots) != b.degree():
        raise ExactRootFailure("incomplete factorisation")
    return roots


def exact_roots(b: IndicialPoly) -> list:
    """Roots as ExponentQ, in pipeline order: construction data, rational-root
    theorem, perfect-square quadratic, multivariate factorisation."""
    if b.degree() < 1:
        return []
    if b.roots is not None:
        return list(b.roots)
    if not b.parameters():
        return [ExponentQ(r) for r in _rational_roots([c.constant_value() for c in b.coefficients])]
    if b.degree() == 2:
        try:
            return _quadratic_roots(b)
        except ExactRootFailure:
            pass
    return _factored_roots(b)


def numeric_roots(b: IndicialPoly, assignment: Mapping, dps: int = 50) -> list:
    """Roots of the specialised polynomial, computed with mpmath at ``dps`` digits."""
    with mpmath.workdps(dps):
        coeffs = []
        for c in b.coefficients:
            try:
                v = c.substitute(assignment).constant_value()
                coeffs.append(mpmath.mpf(v.numerator) / v.denominator)
            except (TypeError, ValueError):
                coeffs.append(mpmath.mpc(c.evaluate(assignment)))
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if len(coeffs) <= 1:
            return []
        roots = mpmath.polyroots(coeffs[::-1], maxsteps=500, extraprec=4 * dps)
        return [complex(r) for r in roots]


def char_exponents(P: WeylOp, at, mode=EXACT) -> list:
    """Characteristic exponents at 0 or infinity (or any rational point).

    Exact mode returns ExponentQ values or raises ExactRootFailure; pass a
    :class:`Numeric` mode to get complex roots instead.
    """
    b = indicial_polynomial(P, at)
    if isinstance(mode, Numeric):
        return numeric_roots(b, mode.assignment)
    return exact_roots(b)


# ---------------------------------------------------------------- monodromy


def _leading_is_monomial(P: WeylOp) -> bool:
    lead = P.leading_coefficient()
    return len(lead) == 1


def configuration(P: WeylOp) -> str:
    """``"a"`` (infinity regular) or ``"b"`` (singular support in {0, inf})."""
    if is_regular(P, INFINITY):
        return "a"
    if _leading_is_monomial(P) and is_regular(P, 0):
        if indicial_polynomial(P, 0).degree() == P.order():
            return "b"
    raise UnsupportedConfiguration(
        "monodromy at infinity needs a regular singular point at infinity, or "
        "singular support in {0, inf} with 0 regular singular"
    )


def monodromy_at_infinity(P: WeylOp, mode=EXACT, config: str | None = None):
    """Eigenvalues of the monodromy along a large counterclockwise circle.

    Exact mode returns a :class:`ClassMultiset`; numeric mode a list of complex
    numbers computed from the operator specialised at the assignment.
    """
    if isinstance(mode, Numeric):
        P = _specialise(P, mode.assignment)
    if config is None:
        config = configuration(P)
    elif config == "a" and not is_regular(P, INFINITY):
        raise UnsupportedConfiguration("infinity is not regular singular")
    elif config == "b":
        if not (_leading_is_monomial(P) and is_regular(P, 0)):
            raise UnsupportedConfiguration("configuration (b) does not apply")
    at, sign = (INFINITY, -1) if config == "a" else (0, 1)
    b = indicial_polynomial(P, at)
    if b.degree() != P.order():
        raise UnsupportedConfiguration(
            f"indicial polynomial at {at} has degree {b.degree()} < order {P.order()}"
        )
    if isinstance(mode, Numeric):
        return [complex(np.exp(2j * np.pi * sign * r)) for r in numeric_roots(b, {})]
    return ClassMultiset(ExpClass(r * sign) for r in exact_roots(b))


def _specialise(P: WeylOp, assignment: Mapping) -> WeylOp:
    exact = {}
    for k, v in assignment.items():
        exact[k] = Fraction(v) if isinstance(v, float) else as_fraction(v)
    Q = P.substitute(exact)
    if Q.parameters():
        missing = ", ".join(sorted(p.name for p in Q.parameters()))
        raise KeyError(f"unassigned parameters: {missing}")
    return Q


# ---------------------------------------------------------------- reciprocity


@dataclass(frozen=True)
class ReciprocityReport:
    holds: bool
    left: object  # monodromy of P without the unit eigenvalue
    right: object  # monodromy of fourier(P), inverted, without the unit eigenvalue
    right_raw: object
    config_left: str
    config_right: str


def match_within(a: Sequence[complex], b: Sequence[complex], tol: float) -> bool:
    """Multiset equality of complex lists up to ``tol`` (optimal pairing)."""
    if len(a) != len(b):
        return False
    if not a:
        return True
    cost = np.abs(np.subtract.outer(np.asarray(a), np.asarray(b)))
    rows, cols = linear_sum_assignment(cost)
    return bool(cost[rows, cols].max() < tol)


def reciprocity_check(P: WeylOp, mode=EXACT) -> ReciprocityReport:
    """Compare eigenvalue multiplicities of ``P`` at infinity with the inverted
    ones of its Fourier transform, ignoring the eigenvalue 1."""
    if isinstance(mode, Numeric):
        P = _specialise(P, mode.assignment)
    if not is_moderate_at_infinity(P):
        raise NotModerate("not moderate at infinity")
    Q = fourier(P)
    cfg_l, cfg_r = configuration(P), configuration(Q)
    if isinstance(mode, Numeric):
        tol = mode.tol
        left = [x for x in monodromy_at_infinity(P, Numeric({}, tol)) if abs(x - 1) >= tol]
        raw = monodromy_at_infinity(Q, Numeric({}, tol))
        right = [1 / x for x in raw if abs(x - 1) >= tol]
        holds = match_within(left, right, tol)
        return ReciprocityReport(holds, left, right, raw, cfg_l, cfg_r)
    left = monodromy_at_infinity(P).without_unity()
    raw = monodromy_at_infinity(Q)
    right = raw.inverted().without_unity()
    return ReciprocityReport(left == right, left, right, raw, cfg_l, cfg_r)
