"""Monodromy zeta functions in factored form.

A zeta function is ``lead * t^power * prod (1 - c*t^m)^e`` with ``lead`` and
every ``c`` an exponential class and ``e`` an integer. These form an abelian
group under multiplication. Euler integration only ever raises local factors
to integer powers and multiplies them, so the group is closed under all the
operations used here, including the change of variable ``t -> 1/t``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence

from .scalars import (
    MINUS_ONE,
    UNIT,
    ClassMultiset,
    ExpClass,
    ExponentQ,
    class_inverse,
    eval_class,
)


class ZetaFunction:
    __slots__ = ("lead", "power", "_factors")

    def __init__(self, lead: ExpClass = UNIT, power: int = 0, factors: Mapping | None = None):
        clean: dict = {}
        if factors:
            for (c, m), e in factors.items():
                if m < 1:
                    raise ValueError("factor t-power must be positive")
                if not isinstance(c, ExpClass):
                    c = ExpClass(c)
                clean[(c, m)] = clean.get((c, m), 0) + int(e)
        object.__setattr__(self, "lead", lead if isinstance(lead, ExpClass) else ExpClass(lead))
        object.__setattr__(self, "power", int(power))
        object.__setattr__(self, "_factors", {k: e for k, e in clean.items() if e})

    def __setattr__(self, key, value):
        raise AttributeError("ZetaFunction is immutable")

    @classmethod
    def one(cls) -> "ZetaFunction":
        return cls()

    @classmethod
    def factor(cls, c: ExpClass = UNIT, m: int = 1, e: int = 1) -> "ZetaFunction":
        """``(1 - c*t^m)^e``."""
        return cls(factors={(c, m): e})

    @property
    def factors(self) -> dict:
        return dict(self._factors)

    def factor_items(self):
        return sorted(self._factors.items(), key=lambda kv: (kv[0][1], kv[0][0].sort_key()))

    def degree(self) -> int:
        return self.power + sum(e * m for (_, m), e in self._factors.items())

    def parameters(self) -> frozenset:
        out = self.lead.parameters()
        for c, _ in self._factors:
            out |= c.parameters()
        return out

    def is_one(self) -> bool:
        return self == ZetaFunction.one()

    def __eq__(self, other):
        if not isinstance(other, ZetaFunction):
            return NotImplemented
        return (self.lead, self.power, self._factors) == (other.lead, other.power, other._factors)

    def __hash__(self):
        return hash((self.lead, self.power, frozenset(self._factors.items())))

    def __mul__(self, other: "ZetaFunction") -> "ZetaFunction":
        return zeta_mul(self, other)

    def __truediv__(self, other: "ZetaFunction") -> "ZetaFunction":
        return zeta_mul(self, zeta_pow(other, -1))

    def __pow__(self, n: int) -> "ZetaFunction":
        return zeta_pow(self, n)

    def __repr__(self):
        return f"ZetaFunction({self})"

    def __str__(self):
        return format_zeta(self)

    def to_json(self) -> dict:
        return {
            "lead": str(self.lead),
            "t_power": self.power,
            "factors": [
                {"class": str(c), "m": m, "exponent": e} for (c, m), e in self.factor_items()
            ],
        }


def _factor_text(c: ExpClass, m: int) -> str:
    tm = "t" if m == 1 else f"t^{m}"
    return f"1 - {tm}" if c.is_unity() else f"1 - {c}*{tm}"


def format_zeta(z: ZetaFunction) -> str:
    items = []
    if not z.lead.is_unity():
        items.append(str(z.lead))
    if z.power:
        items.append("t" if z.power == 1 else f"t^{z.power}")
    factors = z.factor_items()
    if not items and len(factors) == 1 and factors[0][1] == 1:
        (c, m), _ = factors[0]
        return _factor_text(c, m)
    for (c, m), e in factors:
        items.append(f"({_factor_text(c, m)})" + ("" if e == 1 else f"^{e}"))
    return " * ".join(items) if items else "1"


# ---------------------------------------------------------------- group law


def zeta_one() -> ZetaFunction:
    return ZetaFunction()


def zeta_mul(a: ZetaFunction, b: ZetaFunction) -> ZetaFunction:
    factors = dict(a._factors)
    for k, e in b._factors.items():
        factors[k] = factors.get(k, 0) + e
    return ZetaFunction(a.lead * b.lead, a.power + b.power, factors)


def zeta_pow(a: ZetaFunction, n: int) -> ZetaFunction:
    return ZetaFunction(a.lead ** n, a.power * n, {k: e * n for k, e in a._factors.items()})


def zeta_invert_variable(z: ZetaFunction) -> ZetaFunction:
    """Substitute ``t -> 1/t`` using ``1 - c/t^m = (-c) t^-m (1 - c^-1 t^m)``."""
    lead = z.lead
    power = -z.power
    factors: dict = {}
    for (c, m), e in z._factors.items():
        lead = lead * (MINUS_ONE * c) ** e
        power -= m * e
        key = (class_inverse(c), m)
        factors[key] = factors.get(key, 0) + e
    return ZetaFunction(lead, power, factors)


def zeta_tilde(z: ZetaFunction) -> ZetaFunction:
    """``t^deg * z(1/t)``: characteristic-polynomial form of a zeta function."""
    inv = zeta_invert_variable(z)
    return ZetaFunction(inv.lead, inv.power + z.degree(), inv._factors)


# ---------------------------------------------------------------- local zeta functions


def acampo_monomial(m: Sequence[int]) -> ZetaFunction:
    """Zeta function at the origin of ``z1^m1 * ... * zk^mk``."""
    m = list(m)
    if not m:
        raise ValueError("acampo_monomial needs at least one exponent")
    if any(mi < 1 for mi in m):
        raise ValueError("monomial exponents must be positive")
    if len(m) == 1:
        return ZetaFunction.factor(UNIT, m[0])
    return ZetaFunction.one()


def local_system_zeta(k: int, m: int, eigenvalues: Iterable[ExpClass]) -> ZetaFunction:
    """``j_!L`` along ``h = z1^m`` with ``L`` on ``(C*)^k x C^(n-k)``.

    For ``k = 1`` this is ``det(1 - t^m A) = prod (1 - lambda t^m)`` over the
    eigenvalues of the monodromy ``A`` of ``L``; for ``k > 1`` it is trivial.
    """
    if k < 1 or m < 1:
        raise ValueError("k and m must be positive")
    eigenvalues = [c if isinstance(c, ExpClass) else ExpClass(c) for c in eigenvalues]
    if not eigenvalues:
        raise ValueError("the local system must have positive rank")
    if k > 1:
        return ZetaFunction.one()
    z = ZetaFunction.one()
    for c in eigenvalues:
        z = z * ZetaFunction.factor(c, m)
    return z


def multi_monomial_zeta(positive_exponent_count: int) -> ZetaFunction:
    if positive_exponent_count < 2:
        raise ValueError("at least two positive exponents are required; use local_system_zeta")
    return ZetaFunction.one()


@dataclass(frozen=True)
class Stratum:
    name: str
    chi: int
    local_zeta: ZetaFunction


def euler_integral(strata: Iterable[Stratum]) -> ZetaFunction:
    """Topological integral: product of local zetas raised to stratum Euler characteristics."""
    z = ZetaFunction.one()
    for s in strata:
        z = z * zeta_pow(s.local_zeta, s.chi)
    return z


def _chi_formula(dim: int, d: int) -> int:
    value = Fraction((1 - d) ** (dim + 1) - 1, d) + dim + 1
    assert value.denominator == 1, value
    return int(value)


def chi_hypersurface(N: int, d: int) -> int:
    """Euler characteristic of a smooth degree-``d`` hypersurface in ``P^N``."""
    if N < 1 or d < 1:
        raise ValueError("need N >= 1 and d >= 1")
    return _chi_formula(N, d)


def mt3_closed_form(N: int, d: int, alpha) -> ZetaFunction:
    """``(1 - e(-d*alpha) t)^((1-d)^(N-1))``."""
    if N < 1 or d < 1:
        raise ValueError("need N >= 1 and d >= 1")
    c = ExpClass(ExponentQ.param(alpha, -d))
    return ZetaFunction.factor(c, 1, (1 - d) ** (N - 1))


@dataclass(frozen=True)
class MT3Strata:
    chi_H: int
    chi_D1: int
    chi_D2: int
    chi_D12: int
    chi_open: int
    strata: tuple


def mt3_strata(N: int, d: int, alpha) -> MT3Strata:
    """Stratify the hyperplane ``H ~ P^(N-1)`` by two transversal hypersurfaces.

    ``D1`` has degree ``d`` and ``D2`` is a hyperplane. Only the open stratum
    carries a nontrivial local zeta function.
    """
    if N < 1 or d < 1:
        raise ValueError("need N >= 1 and d >= 1")
    chi_H = N
    chi_D1 = _chi_formula(N - 1, d)
    chi_D2 = N - 1
    chi_D12 = _chi_formula(N - 2, d)
    chi_open = chi_H - chi_D1 - chi_D2 + chi_D12
    open_zeta = local_system_zeta(1, 1, [ExpClass(ExponentQ.param(alpha, -d))])
    strata = (
        Stratum("H minus (D1 u D2)", chi_open, open_zeta),
        Stratum("D1 minus D2", chi_D1 - chi_D12, ZetaFunction.one()),
        Stratum("D2 minus D1", chi_D2 - chi_D12, ZetaFunction.one()),
        Stratum("D1 n D2", chi_D12, ZetaFunction.one()),
    )
    return MT3Strata(chi_H, chi_D1, chi_D2, chi_D12, chi_open, strata)


def mt3_via_strata(N: int, d: int, alpha) -> ZetaFunction:
    return euler_integral(mt3_strata(N, d, alpha).strata)


# ---------------------------------------------------------------- multiplicities


def factor_roots(c: ExpClass, m: int) -> list:
    """All ``lambda`` with ``lambda^m = c``, so ``1 - c t^m = prod (1 - lambda t)``."""
    x = c.exponent
    return [ExpClass((x + j) / m) for j in range(m)]


def multiplicities_mt2(z: ZetaFunction, N: int) -> ClassMultiset:
    """Signed multiplicity of each factor ``1 - lambda t`` in ``z^((-1)^(N+1))``.

    The unit class is dropped; lead constants and powers of ``t`` carry no
    eigenvalue.
    """
    sign = 1 if (N + 1) % 2 == 0 else -1
    counts: dict = {}
    for (c, m), e in z._factors.items():
        for lam in factor_roots(c, m):
            counts[lam] = counts.get(lam, 0) + sign * e
    return ClassMultiset(counts).without_unity()


# ---------------------------------------------------------------- numerics


def _factor_series(c: complex, m: int, e: int, n: int) -> list:
    out = [0j] * n
    if e >= 0:
        for i in range(e + 1):
            if m * i >= n:
                break
            out[m * i] += comb(e, i) * (-c) ** i
    else:
        k = -e
        i = 0
        while m * i < n:
            out[m * i] += comb(k + i - 1, i) * c ** i
            i += 1
    return out


def _series_mul(a: list, b: list) -> list:
    n = len(a)
    out = [0j] * n
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j in range(n - i):
            out[i + j] += ai * b[j]
    return out


def series_eval(z: ZetaFunction, assignment: Mapping | None = None, n_terms: int = 8) -> list:
    """First ``n_terms`` Laurent coefficients, starting at ``t^z.power``."""
    assignment = assignment or {}
    series = [0j] * n_terms
    if n_terms:
        series[0] = eval_class(z.lead, assignment)
    for (c, m), e in z._factors.items():
        series = _series_mul(series, _factor_series(eval_class(c, assignment), m, e, n_terms))
    return series


def evaluate_at(z: ZetaFunction, t: complex, assignment: Mapping | None = None) -> complex:
    """Numeric value of the factored rational function at ``t``."""
    assignment = assignment or {}
    value = eval_class(z.lead, assignment) * t ** z.power
    for (c, m), e in z._factors.items():
        value *= (1 - eval_class(c, assignment) * t ** m) ** e
    return value
