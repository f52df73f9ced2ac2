"""The one-variable Weyl algebra and its Fourier transform.

Operators are kept normally ordered, ``sum c_jk z^j d^k`` with every power of
the variable to the left of every derivative. The same class serves both
sides of the Fourier transform; ``side`` names the variable (``"z"`` or
``"w"``) and mixing sides is an error.
"""
from __future__ import annotations

from math import comb, perm
from typing import Mapping

from .scalars import PolyScalar

SIDES = ("z", "w")


class SideMismatch(ValueError):
    pass


class WeylOp:
    __slots__ = ("_terms", "side", "_hash", "indicial_hints")

    def __init__(self, terms: Mapping | None = None, side: str = "z", indicial_hints=None):
        if side not in SIDES:
            raise ValueError(f"side must be one of {SIDES}, got {side!r}")
        clean = {}
        if terms:
            for (j, k), c in terms.items():
                if j < 0 or k < 0:
                    raise ValueError("negative power in a Weyl monomial")
                c = PolyScalar.coerce(c)
                if c:
                    clean[(j, k)] = c
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "side", side)
        object.__setattr__(self, "_hash", None)
        # roots of the indicial polynomial known by construction, keyed by point;
        # ignored by equality and dropped by arithmetic
        object.__setattr__(self, "indicial_hints", dict(indicial_hints or {}))

    def __setattr__(self, key, value):
        raise AttributeError("WeylOp is immutable")

    def with_hints(self, hints) -> "WeylOp":
        return WeylOp(self._terms, self.side, hints)

    # constructors

    @classmethod
    def const(cls, c, side="z"):
        return cls({(0, 0): c}, side)

    @classmethod
    def var(cls, side="z"):
        return cls({(1, 0): 1}, side)

    @classmethod
    def deriv(cls, side="z"):
        return cls({(0, 1): 1}, side)

    @classmethod
    def euler(cls, side="z"):
        """The Euler operator ``theta = z*d``."""
        return cls({(1, 1): 1}, side)

    @classmethod
    def polynomial(cls, coeffs: Mapping[int, object], side="z"):
        """Multiplication operator by ``sum coeffs[j] * z^j``."""
        return cls({(j, 0): c for j, c in coeffs.items()}, side)

    # inspection

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Monomials by (d-degree desc, z-degree desc)."""
        return sorted(self._terms.items(), key=lambda t: (-t[0][1], -t[0][0]))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def order(self) -> int:
        if not self._terms:
            raise ValueError("the zero operator has no order")
        return max(k for _, k in self._terms)

    def coefficient(self, j: int, k: int) -> PolyScalar:
        return self._terms.get((j, k), PolyScalar())

    def coefficient_poly(self, k: int) -> dict:
        """The polynomial coefficient ``a_k(z)`` of ``d^k`` as ``{j: c}``."""
        return {j: c for (j, kk), c in self._terms.items() if kk == k}

    def leading_coefficient(self) -> dict:
        return self.coefficient_poly(self.order())

    def parameters(self) -> frozenset:
        out = frozenset()
        for c in self._terms.values():
            out |= c.parameters()
        return out

    def on_side(self, side: str) -> "WeylOp":
        """Same coefficients read in the other variable name."""
        return WeylOp(self._terms, side)

    def substitute(self, assignment: Mapping) -> "WeylOp":
        return WeylOp({m: c.substitute(assignment) for m, c in self._terms.items()}, self.side)

    # arithmetic

    def __eq__(self, other):
        if not isinstance(other, WeylOp):
            return NotImplemented
        return self.side == other.side and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.side, frozenset(self._terms.items()))))
        return self._hash

    def _coerce(self, other) -> "WeylOp":
        if isinstance(other, WeylOp):
            if other.side != self.side:
                raise SideMismatch(f"cannot combine {self.side}-side and {other.side}-side operators")
            return other
        return WeylOp.const(other, self.side)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out[m] + c if m in out else c
        return WeylOp(out, self.side)

    __radd__ = __add__

    def __neg__(self):
        return WeylOp({m: -c for m, c in self._terms.items()}, self.side)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        return weyl_mul(self, self._coerce(other))

    def __rmul__(self, other):
        return weyl_mul(self._coerce(other), self)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of an operator")
        result = WeylOp.const(1, self.side)
        for _ in range(n):
            result = result * self
        return result

    def __repr__(self):
        from .parser import print_operator

        return f"WeylOp({print_operator(self)!r}, side={self.side!r})"

    def __str__(self):
        from .parser import print_operator

        return print_operator(self)


def _mono_product(a: int, b: int, c: int, e: int):
    """Normal order ``(z^a d^b)(z^c d^e)``: yields ``((j, k), integer)``."""
    for i in range(min(b, c) + 1):
        yield (a + c - i, b + e - i), comb(b, i) * perm(c, i)


def weyl_mul(P: WeylOp, Q: WeylOp) -> WeylOp:
    if P.side != Q.side:
        raise SideMismatch(f"cannot multiply {P.side}-side and {Q.side}-side operators")
    out: dict = {}
    for (a, b), c1 in P._terms.items():
        for (c, e), c2 in Q._terms.items():
            coeff = c1 * c2
            for m, n in _mono_product(a, b, c, e):
                term = coeff.scale(n)
                out[m] = out[m] + term if m in out else term
    return WeylOp(out, P.side)


def apply_to_monomial(P: WeylOp, n: int) -> WeylOp:
    """Apply ``P`` to the function ``z^n``; the result is an order-0 operator."""
    out: dict = {}
    for (j, k), c in P._terms.items():
        if k > n:
            continue
        power = n - k + j
        term = c.scale(perm(n, k))
        out[power] = out[power] + term if power in out else term
    return WeylOp.polynomial(out, P.side)


def apply_to_polynomial(P: WeylOp, f: WeylOp) -> WeylOp:
    """Apply ``P`` to the polynomial function ``f`` (an order-0 operator)."""
    if f and f.order() != 0:
        raise ValueError("apply_to_polynomial expects an order-0 operator as the function")
    result = WeylOp(side=P.side)
    for (j, _), c in f._terms.items():
        result = result + apply_to_monomial(P, j) * WeylOp.const(c, P.side)
    return result


def fourier(P: WeylOp) -> WeylOp:
    """The ring isomorphism ``z -> -d_w``, ``d_z -> w``."""
    if P.side != "z":
        raise SideMismatch("fourier expects a z-side operator")
    out: dict = {}
    for (j, k), c in P._terms.items():
        sign = -1 if j % 2 else 1
        # (-d_w)^j w^k
        for m, n in _mono_product(0, j, k, 0):
            term = c.scale(sign * n)
            out[m] = out[m] + term if m in out else term
    return WeylOp(out, "w")


def inverse_fourier(P: WeylOp) -> WeylOp:
    """Inverse isomorphism ``w -> d_z``, ``d_w -> -z``."""
    if P.side != "w":
        raise SideMismatch("inverse_fourier expects a w-side operator")
    out: dict = {}
    for (j, k), c in P._terms.items():
        sign = -1 if k % 2 else 1
        # d_z^j (-z)^k
        for m, n in _mono_product(0, j, k, 0):
            term = c.scale(sign * n)
            out[m] = out[m] + term if m in out else term
    return WeylOp(out, "z")


def sign_flip(P: WeylOp) -> WeylOp:
    """Substitute ``z -> -z``, ``d -> -d``."""
    return WeylOp({(j, k): (-c if (j + k) % 2 else c) for (j, k), c in P._terms.items()}, P.side)
