"""Local coordinates, Newton polygons and slopes of operators on P^1."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Union

from .scalars import PolyScalar, as_fraction
from .weyl import WeylOp


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()
Point = Union[Fraction, _Infinity]


def as_point(at) -> Point:
    """Accept ``INFINITY``, ``"inf"``, an int, a Fraction or a ``"p/q"`` string."""
    if at is INFINITY:
        return at
    if isinstance(at, str):
        s = at.strip().lower()
        if s in ("inf", "infinity", "oo"):
            return INFINITY
        return Fraction(s)
    return as_fraction(at)


# Laurent polynomials in u are dicts {power: PolyScalar}.


def _laurent_add(a: dict, power: int, c: PolyScalar):
    if power in a:
        c = a[power] + c
        if c:
            a[power] = c
        else:
            del a[power]
    elif c:
        a[power] = c


@dataclass(frozen=True)
class LocalOperator:
    """``sum_k a_k(u) d_u^k`` with Laurent coefficients, at a base point."""

    coefficients: dict  # k -> {power: PolyScalar}
    at: object

    def order(self) -> int:
        return max(self.coefficients)

    def valuation(self, k: int) -> int:
        """``ord_u a_k`` (generic in the parameters)."""
        return min(self.coefficients[k])

    def points(self) -> list:
        return sorted((k, self.valuation(k) - k) for k in self.coefficients)

    def shifted(self, n: int) -> "LocalOperator":
        """Multiply on the left by ``u^n``."""
        return LocalOperator(
            {k: {p + n: c for p, c in a.items()} for k, a in self.coefficients.items()}, self.at
        )

    def apply_power(self, r: int) -> dict:
        """Apply to the function ``u^r``; returns a Laurent polynomial."""
        out: dict = {}
        for k, a in self.coefficients.items():
            falling = 1
            for i in range(k):
                falling *= r - i
            if not falling:
                continue
            for p, c in a.items():
                _laurent_add(out, p + r - k, c.scale(falling))
        return out


def _infinity_powers(kmax: int) -> list:
    """Normal forms of ``(-u^2 d_u)^k`` for k = 0..kmax as ``{i: {power: int}}``."""
    forms = [{0: {0: 1}}]
    for _ in range(kmax):
        prev = forms[-1]
        nxt: dict = {}
        for i, a in prev.items():
            for p, c in a.items():
                # -u^2 * a'(u) d^i
                if p:
                    slot = nxt.setdefault(i, {})
                    slot[p + 1] = slot.get(p + 1, 0) - c * p
                # -u^2 * a(u) d^(i+1)
                slot = nxt.setdefault(i + 1, {})
                slot[p + 2] = slot.get(p + 2, 0) - c
        forms.append({i: {p: c for p, c in a.items() if c} for i, a in nxt.items()})
    return forms


def localize(P: WeylOp, at) -> LocalOperator:
    """Rewrite ``P`` in the local coordinate ``u`` at a rational point or at infinity."""
    if P.is_zero():
        raise ValueError("cannot localize the zero operator")
    at = as_point(at)
    coeffs: dict = {}
    if at is INFINITY:
        forms = _infinity_powers(P.order())
        for (j, k), c in P.terms.items():
            # z^j d_z^k = u^-j (-u^2 d_u)^k
            for i, a in forms[k].items():
                slot = coeffs.setdefault(i, {})
                for p, n in a.items():
                    _laurent_add(slot, p - j, c.scale(n))
    else:
        for (j, k), c in P.terms.items():
            slot = coeffs.setdefault(k, {})
            for i in range(j + 1):
                n = comb(j, i) * at ** (j - i)
                if n:
                    _laurent_add(slot, i, c.scale(n))
    coeffs = {k: a for k, a in coeffs.items() if a}
    return LocalOperator(coeffs, at)


def lower_hull(points: list) -> list:
    """Lower convex hull of points with distinct x, left to right."""
    hull: list = []
    for p in sorted(points):
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop hull[-1] if it lies on or above the segment hull[-2] -> p
            if (y2 - y1) * (p[0] - x1) >= (p[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def newton_slopes(points: list) -> list:
    hull = lower_hull(points)
    if len(hull) == 1:
        return [Fraction(0)]
    out = set()
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        out.add(max(Fraction(y2 - y1, x2 - x1), Fraction(0)))
    return sorted(out)


def local_slopes(L: LocalOperator) -> list:
    return newton_slopes(L.points())


def slopes(P: WeylOp, at) -> list:
    """Sorted slope set of ``P`` at a point (nonnegative rationals)."""
    if P.is_zero():
        raise ValueError("slopes of the zero operator are undefined")
    return local_slopes(localize(P, at))


def is_regular(P: WeylOp, at) -> bool:
    return slopes(P, at) == [0]


def is_moderate_at_infinity(P: WeylOp) -> bool:
    """Every exponential factor at infinity has pole order at most one."""
    return all(s <= 1 for s in slopes(P, INFINITY))
