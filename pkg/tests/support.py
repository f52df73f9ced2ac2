"""Random generators and independent oracles shared by the test modules.

The oracles deliberately avoid the package's own algebra: differential
operators are applied to sympy expressions with ``sympy.diff``, characteristic
polynomials come from numpy determinants, and Euler characteristics from a
Chern-class series.
"""
from __future__ import annotations

import random
from fractions import Fraction

import numpy as np
import sympy as sp

from fourier_monodromy import ExpClass, ExponentQ, PolyScalar, WeylOp, ZetaFunction

PARAMS = ("a", "b", "c")


# ---------------------------------------------------------------- generators


def rand_fraction(rng: random.Random, num: int = 9, den: int = 7) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def rand_scalar(rng: random.Random, n_params: int = 3, max_deg: int = 2) -> PolyScalar:
    names = PARAMS[:n_params]
    out = PolyScalar()
    for _ in range(rng.randint(0, 3)):
        term = PolyScalar.const(rand_fraction(rng))
        for name in names:
            term = term * PolyScalar.param(name) ** rng.randint(0, max_deg)
        out = out + term
    return out


def rand_operator(rng: random.Random, side: str = "z", max_deg: int = 5, n_params: int = 3) -> WeylOp:
    terms = {}
    for _ in range(rng.randint(1, 6)):
        terms[(rng.randint(0, max_deg), rng.randint(0, max_deg))] = rand_scalar(rng, n_params)
    return WeylOp(terms, side)


def rand_exponent(rng: random.Random, names=("alpha",)) -> ExponentQ:
    x = ExponentQ(rand_fraction(rng, 11, 6))
    for name in names:
        if rng.random() < 0.6:
            x = x + ExponentQ.param(name, rng.randint(-3, 3))
    return x


def rand_class(rng: random.Random, names=("alpha",)) -> ExpClass:
    return ExpClass(rand_exponent(rng, names))


def rand_zeta(rng: random.Random, names=("alpha",)) -> ZetaFunction:
    z = ZetaFunction(lead=rand_class(rng, names), power=rng.randint(-3, 3))
    for _ in range(rng.randint(0, 4)):
        z = z * ZetaFunction.factor(rand_class(rng, names), rng.randint(1, 4), rng.choice([-2, -1, 1, 2, 3]))
    return z


def rand_assignment(rng: random.Random, names) -> dict:
    """Generic rational values: nonzero, with prime denominators so that
    exponents stay distinct and non-integral."""
    out = {}
    for n in names:
        num = 0
        while num == 0:
            num = rng.randint(-200, 200)
        out[n] = Fraction(num, rng.choice([37, 41, 43, 47, 53]))
    return out


# ---------------------------------------------------------------- sympy oracles


def to_sympy_poly(c: PolyScalar):
    expr = sp.Integer(0)
    for mono, q in c.items():
        term = sp.Rational(q.numerator, q.denominator)
        for name, k in mono:
            term *= sp.Symbol(name) ** k
        expr += term
    return expr


def act(P: WeylOp, f, x):
    """Apply the normally ordered operator ``P`` to the sympy expression ``f(x)``."""
    return sp.expand(sum(to_sympy_poly(c) * x ** j * sp.diff(f, x, k) for (j, k), c in P.terms.items()))


def fourier_act(P: WeylOp, g, w):
    """Apply the image of ``P`` under ``z -> -d_w, d_z -> w`` to ``g(w)`` without
    normal ordering: ``z^j d^k`` becomes ``(-d_w)^j`` composed with ``w^k``."""
    out = sp.Integer(0)
    for (j, k), c in P.terms.items():
        out += to_sympy_poly(c) * (-1) ** j * sp.diff(w ** k * g, w, j)
    return sp.expand(out)


def chained(factors, g):
    """Apply callables right to left: ``factors[0](factors[1](... g))``."""
    for f in reversed(factors):
        g = sp.expand(f(g))
    return g


def _laurent_extreme(expr, x, pick):
    """Coefficient of the lowest (``pick=min``) or highest power of ``x``."""
    groups: dict = {}
    for term in sp.Add.make_args(sp.expand(expr)):
        coeff, power = term.as_coeff_exponent(x)
        groups[power] = groups.get(power, 0) + coeff
    groups = {p: c for p, c in groups.items() if sp.simplify(c) != 0}
    return sp.factor(groups[pick(groups)])


def indicial_oracle(P: WeylOp, at):
    """Indicial polynomial from the action on ``z^s`` (``at=0``) or ``z^-s`` for
    large ``z`` (``at='inf'``); a sympy polynomial in ``s``, up to scale."""
    s, z = sp.symbols("s z")
    if at == 0:
        expr = sp.powsimp(sp.expand(act(P, z ** s, z) / z ** s))
        return _laurent_extreme(expr, z, min)
    expr = sp.powsimp(sp.expand(act(P, z ** (-s), z) * z ** s))
    return _laurent_extreme(expr, z, max)


# ---------------------------------------------------------------- numeric oracles


def det_series(eigs, m: int, n_terms: int) -> np.ndarray:
    """Coefficients of ``det(I - t^m A)`` for ``A = diag(eigs)`` by sampling the
    determinant on the unit circle and inverting with an FFT."""
    A = np.diag(np.asarray(eigs, dtype=complex))
    size = max(n_terms, m * len(eigs) + 1)
    ts = np.exp(2j * np.pi * np.arange(size) / size)
    values = np.array([np.linalg.det(np.eye(len(eigs)) - t ** m * A) for t in ts])
    coeffs = np.fft.fft(values) / size
    return coeffs[:n_terms]


def expanded_series(z: ZetaFunction, assignment, n_terms: int) -> np.ndarray:
    """Power series of a zeta function built by explicit convolution."""
    from fourier_monodromy.scalars import eval_class

    out = np.zeros(n_terms, dtype=complex)
    out[0] = eval_class(z.lead, assignment)
    for (c, m), e in z.factors.items():
        cv = eval_class(c, assignment)
        base = np.zeros(n_terms, dtype=complex)
        if e > 0:
            base[0] = 1
            if m < n_terms:
                base[m] = -cv
        else:
            i = 0
            while m * i < n_terms:
                base[m * i] = cv ** i  # geometric series of 1/(1 - c t^m)
                i += 1
        for _ in range(abs(e)):
            out = np.convolve(out, base)[:n_terms]
    return out


def hypersurface_chi_oracle(N: int, d: int) -> int:
    """Euler characteristic of a smooth degree-d hypersurface in P^N from its
    total Chern class ``(1+h)^(N+1) / (1+d h)`` and ``deg = d``."""
    h = sp.Symbol("h")
    series = sp.series((1 + h) ** (N + 1) / (1 + d * h), h, 0, N + 1).removeO()
    return int(d * sp.Poly(series, h).coeff_monomial(h ** (N - 1)))


# ---------------------------------------------------------------- CLI goldens

GOLDEN_CASES = {
    "fourier-z": ["fourier", "z"],
    "fourier-d": ["fourier", "d"],
    "fourier-th": ["fourier", "th"],
    "fourier-bessel-json": ["fourier", "z^2*d^2 + z*d + z^2 - nu^2", "--format", "json"],
    "slopes-bessel": ["slopes", "z^2*d^2 + z*d + z^2 - nu^2", "--at", "inf"],
    "slopes-gauss": ["slopes", "z*d^2 - z^2*d^2 + c*d - a*z*d - b*z*d - z*d - a*b", "--at", "inf"],
    "slopes-katz31-json": [
        "slopes", "g*z^3*d^3 + 3*g*z^2*d^2 + g*z*d - z^2*d - z - z*d", "--at", "inf", "--format", "json",
    ],
    "exponents-bessel": ["exponents", "z^2*d^2 + z*d + z^2 - nu^2", "--at", "0"],
    "exponents-bessel-assign-json": [
        "exponents", "z^2*d^2 + z*d + z^2 - nu^2", "--at", "0", "--assign", "nu=1/3", "--format", "json",
    ],
    "monodromy-bessel-json": [
        "monodromy-inf", "z^2*d^2 + z*d + z^2 - nu^2", "--assign", "nu=1/3", "--format", "json",
    ],
    "reciprocity-bessel": ["reciprocity", "--family", "bessel"],
    "reciprocity-gauss-json": ["reciprocity", "--family", "gauss", "--format", "json"],
    "reciprocity-katz31": ["reciprocity", "--family", "katz", "--n", "3", "--m", "1"],
    "zeta-mt3-N2-d3": ["zeta", "mt3", "--N", "2", "--d", "3"],
    "zeta-mt3-N3-d4-json": ["zeta", "mt3", "--N", "3", "--d", "4", "--format", "json"],
    "zeta-scenario-4i": ["zeta", "scenario", "fixtures/example-4i.json"],
    "zeta-scenario-4ii-json": ["zeta", "scenario", "example-4ii", "--format", "json"],
    "zeta-acampo-3": ["zeta", "acampo", "--m", "3"],
    "zeta-acampo-2-5": ["zeta", "acampo", "--m", "2,5"],
    "zeta-chi-2-3-json": ["zeta", "chi", "--N", "2", "--d", "3", "--format", "json"],
}


def run_cli(argv):
    """Run the CLI in-process; returns (exit code, stdout, stderr)."""
    import contextlib
    import io

    from fourier_monodromy.cli import main

    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()
