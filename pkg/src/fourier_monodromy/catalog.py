"""Named operator families: Bessel, Gauss and Katz hypergeometric operators,
and the ``(N, d, alpha)`` input data of the rank-one ``f^alpha`` family."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .newton import INFINITY
from .scalars import ExponentQ, PolyScalar
from .weyl import WeylOp

FAMILIES = ("bessel", "gauss", "katz", "falpha")


def _p(name: str) -> PolyScalar:
    return PolyScalar.param(name)


def bessel(nu: str = "nu") -> WeylOp:
    """``z^2 d^2 + z d + z^2 - nu^2``."""
    return WeylOp({(2, 2): 1, (1, 1): 1, (2, 0): 1, (0, 0): -(_p(nu) ** 2)})


def gauss(alpha: str = "alpha", beta: str = "beta", gamma: str = "gamma") -> WeylOp:
    """``z(1-z) d^2 + (gamma - (alpha+beta+1) z) d - alpha*beta``."""
    a, b, c = _p(alpha), _p(beta), _p(gamma)
    P = WeylOp({(1, 2): 1, (2, 2): -1, (0, 1): c, (1, 1): -(a + b + 1), (0, 0): -(a * b)})
    return P.with_hints({INFINITY: (ExponentQ.param(alpha), ExponentQ.param(beta))})


def katz_names(n: int, m: int):
    return [f"alpha{i}" for i in range(1, n + 1)], [f"beta{j}" for j in range(1, m + 1)]


def _check_katz(n, m, alphas, betas):
    if not n > m >= 0:
        raise ValueError(f"Katz operators need n > m >= 0, got n={n}, m={m}")
    default_a, default_b = katz_names(n, m)
    alphas = list(alphas) if alphas is not None else default_a
    betas = list(betas) if betas is not None else default_b
    if len(alphas) != n or len(betas) != m:
        raise ValueError("wrong number of Katz exponents")
    return alphas, betas


def katz(n: int, m: int, alphas: Sequence[str] | None = None,
         betas: Sequence[str] | None = None, gamma: str = "gamma") -> WeylOp:
    """``gamma * prod(th - alpha_i) - z * prod(th - beta_j)``, built in theta form."""
    alphas, betas = _check_katz(n, m, alphas, betas)
    theta = WeylOp.euler()
    left = WeylOp.const(_p(gamma))
    for a in alphas:
        left = left * (theta - _p(a))
    right = WeylOp.var()
    for b in betas:
        right = right * (theta - _p(b))
    P = left - right
    return P.with_hints({0: tuple(ExponentQ.param(a) for a in alphas)})


def katz_fourier_closed_form(n: int, m: int, alphas: Sequence[str] | None = None,
                             betas: Sequence[str] | None = None, gamma: str = "gamma") -> WeylOp:
    """``gamma * prod(-w d - 1 - alpha_i) + d * prod(-w d - 1 - beta_j)`` on the w-side."""
    alphas, betas = _check_katz(n, m, alphas, betas)
    shifted = -WeylOp.euler("w") - 1
    left = WeylOp.const(_p(gamma), "w")
    for a in alphas:
        left = left * (shifted - _p(a))
    right = WeylOp.deriv("w")
    for b in betas:
        right = right * (shifted - _p(b))
    return left + right


def euler_product(exponents: Sequence[str]) -> WeylOp:
    """``prod(th - a_i)`` for exponent strings such as ``"a"`` or ``"1/3"``.

    Regular at both 0 and infinity with leading coefficient ``z^n``, so both
    monodromy configurations apply.
    """
    from .parser import parse_scalar

    theta = WeylOp.euler()
    P = WeylOp.const(1)
    for a in exponents:
        P = P * (theta - parse_scalar(a))
    return P


@dataclass(frozen=True)
class CatalogEntry:
    family: str
    params: tuple = ()
    n: int = 0
    m: int = 0
    N: int = 1
    d: int = 1
    extra: dict = field(default_factory=dict)


def catalog_build(entry: CatalogEntry):
    """Build the operator of an entry, or the ``(N, d, alpha)`` triple for ``falpha``."""
    family = entry.family.lower()
    params = tuple(entry.params)
    if family == "bessel":
        return bessel(*params[:1])
    if family == "gauss":
        return gauss(*params[:3])
    if family == "katz":
        if params:
            alphas = params[: entry.n]
            betas = params[entry.n: entry.n + entry.m]
            gamma = params[entry.n + entry.m] if len(params) > entry.n + entry.m else "gamma"
            return katz(entry.n, entry.m, alphas, betas, gamma)
        return katz(entry.n, entry.m)
    if family == "falpha":
        if entry.N < 1 or entry.d < 1:
            raise ValueError("need N >= 1 and d >= 1")
        return (entry.N, entry.d, params[0] if params else "alpha")
    raise ValueError(f"unknown family {entry.family!r}; expected one of {FAMILIES}")
