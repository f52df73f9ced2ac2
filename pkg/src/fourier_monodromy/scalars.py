"""Exact scalars: rationals, formal parameters, parameter polynomials and
exponential classes ``e(x) = exp(2*pi*i*x)``.

Everything here is immutable. Rationals are :class:`fractions.Fraction`.
"""
from __future__ import annotations

import cmath
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Mapping, Union

Number = Union[int, Fraction]


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


# letters with a fixed meaning in operator and zeta literals
RESERVED_NAMES = frozenset({"z", "w", "d", "th", "e", "t"})


@total_ordering
class Parameter:
    """A formal symbol such as ``nu`` or ``alpha1``; compared by name."""

    __slots__ = ("name",)

    def __init__(self, name: str):
        if not isinstance(name, str) or not name.isidentifier() or not name.isascii():
            raise ValueError(f"bad parameter name {name!r}")
        if name in RESERVED_NAMES:
            raise ValueError(f"{name!r} is reserved and cannot name a parameter")
        object.__setattr__(self, "name", name)

    def __setattr__(self, key, value):
        raise AttributeError("Parameter is immutable")

    def __eq__(self, other):
        return isinstance(other, Parameter) and other.name == self.name

    def __lt__(self, other):
        return self.name < other.name

    def __hash__(self):
        return hash(("Parameter", self.name))

    def __repr__(self):
        return f"Parameter({self.name!r})"

    def __str__(self):
        return self.name


def _param(p) -> Parameter:
    return p if isinstance(p, Parameter) else Parameter(p)


# A parameter monomial is a sorted tuple of (name, power) pairs.
Mono = tuple


def _mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for name, k in b:
        d[name] = d.get(name, 0) + k
    return tuple(sorted(d.items()))


def _mono_key(m: Mono):
    # graded, then lexicographic on names
    return (-sum(k for _, k in m), tuple((n, -k) for n, k in m))


class PolyScalar:
    """Polynomial in formal parameters with rational coefficients.

    Stored as ``{monomial: Fraction}`` with no zero coefficients.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Mono, Number] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                c = as_fraction(c)
                if c:
                    clean[tuple(m)] = c
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, key, value):
        raise AttributeError("PolyScalar is immutable")

    @classmethod
    def const(cls, c: Number) -> "PolyScalar":
        return cls({(): c})

    @classmethod
    def param(cls, p) -> "PolyScalar":
        return cls({((_param(p).name, 1),): 1})

    @classmethod
    def coerce(cls, x) -> "PolyScalar":
        if isinstance(x, PolyScalar):
            return x
        if isinstance(x, Parameter):
            return cls.param(x)
        return cls.const(as_fraction(x))

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms in canonical order (higher total degree first)."""
        return sorted(self._terms.items(), key=lambda mc: _mono_key(mc[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(m == () for m in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._terms.get((), Fraction(0))

    def parameters(self) -> frozenset:
        return frozenset(Parameter(n) for m in self._terms for n, _ in m)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, PolyScalar):
            try:
                other = PolyScalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(frozenset(self._terms.items())))
        return self._hash

    def __add__(self, other):
        other = PolyScalar.coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return PolyScalar(out)

    __radd__ = __add__

    def __neg__(self):
        return PolyScalar({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-PolyScalar.coerce(other))

    def __rsub__(self, other):
        return PolyScalar.coerce(other) - self

    def __mul__(self, other):
        other = PolyScalar.coerce(other)
        if not self._terms or not other._terms:
            return PolyScalar()
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return PolyScalar(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a PolyScalar")
        result = PolyScalar.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, q: Number) -> "PolyScalar":
        q = as_fraction(q)
        return PolyScalar({m: c * q for m, c in self._terms.items()})

    def substitute(self, assignment: Mapping) -> "PolyScalar":
        """Replace the assigned parameters by exact rationals."""
        values = {_param(k).name: as_fraction(v) for k, v in assignment.items()}
        out: dict = {}
        for m, c in self._terms.items():
            rest = []
            for name, k in m:
                if name in values:
                    c = c * values[name] ** k
                else:
                    rest.append((name, k))
            key = tuple(rest)
            out[key] = out.get(key, 0) + c
        return PolyScalar(out)

    def evaluate(self, assignment: Mapping) -> complex:
        values = {_param(k).name: v for k, v in assignment.items()}
        total = 0j
        for m, c in self._terms.items():
            term = complex(c)
            for name, k in m:
                if name not in values:
                    raise KeyError(f"parameter {name!r} is not assigned")
                term *= complex(values[name]) ** k
            total += term
        return total

    def as_exponent(self) -> "ExponentQ":
        """Read an affine-linear PolyScalar as an ExponentQ (ValueError otherwise)."""
        const = Fraction(0)
        linear = {}
        for m, c in self._terms.items():
            if m == ():
                const = c
            elif len(m) == 1 and m[0][1] == 1:
                linear[m[0][0]] = c
            else:
                raise ValueError(f"{self} is not affine-linear in its parameters")
        return ExponentQ(const, linear)

    def sqrt(self) -> "PolyScalar | None":
        """Exact square root when self is a perfect square, else None."""
        if self.is_zero():
            return PolyScalar()
        if self.is_constant():
            c = self.constant_value()
            r = _rational_sqrt(c)
            return None if r is None else PolyScalar.const(r)
        import sympy

        from ._sympy import from_sympy, to_sympy

        const, factors = sympy.factor_list(to_sympy(self))
        r = _rational_sqrt(Fraction(str(const)))
        if r is None or any(k % 2 for _, k in factors):
            return None
        root = PolyScalar.const(r)
        for f, k in factors:
            root = root * from_sympy(f) ** (k // 2)
        return root

    def __repr__(self):
        return f"PolyScalar({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for i, (m, c) in enumerate(self.items()):
            sign, body = _term_str(m, c)
            if i == 0:
                parts.append(("-" if sign < 0 else "") + body)
            else:
                parts.append((" - " if sign < 0 else " + ") + body)
        return "".join(parts)


def _rational_sqrt(c: Fraction):
    if c < 0:
        return None
    from math import isqrt

    n, d = c.numerator, c.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def mono_str(m: Mono) -> str:
    return "*".join(n if k == 1 else f"{n}^{k}" for n, k in m)


def _term_str(m: Mono, c: Fraction):
    """Return (sign, text) for ``c * m`` with |c| folded into text."""
    sign = -1 if c < 0 else 1
    a = abs(c)
    if not m:
        return sign, str(a)
    if a == 1:
        return sign, mono_str(m)
    return sign, f"{a}*{mono_str(m)}"


class ExponentQ:
    """Affine-linear form ``q + sum(c_p * p)`` over the rationals."""

    __slots__ = ("constant", "linear")

    def __init__(self, constant: Number = 0, linear: Mapping | None = None):
        lin = {}
        if linear:
            for p, c in linear.items():
                c = as_fraction(c)
                if c:
                    lin[_param(p).name] = c
        object.__setattr__(self, "constant", as_fraction(constant))
        object.__setattr__(self, "linear", tuple(sorted(lin.items())))

    def __setattr__(self, key, value):
        raise AttributeError("ExponentQ is immutable")

    @classmethod
    def param(cls, p, coeff: Number = 1) -> "ExponentQ":
        return cls(0, {_param(p).name: coeff})

    @classmethod
    def coerce(cls, x) -> "ExponentQ":
        if isinstance(x, ExponentQ):
            return x
        if isinstance(x, Parameter):
            return cls.param(x)
        return cls(as_fraction(x))

    def linear_map(self) -> dict:
        return dict(self.linear)

    def parameters(self) -> frozenset:
        return frozenset(Parameter(n) for n, _ in self.linear)

    def is_constant(self) -> bool:
        return not self.linear

    def __eq__(self, other):
        if not isinstance(other, ExponentQ):
            return NotImplemented
        return self.constant == other.constant and self.linear == other.linear

    def __hash__(self):
        return hash(("ExponentQ", self.constant, self.linear))

    def __add__(self, other):
        return exp_add(self, ExponentQ.coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return exp_scale(-1, self)

    def __sub__(self, other):
        return exp_add(self, -ExponentQ.coerce(other))

    def __rsub__(self, other):
        return ExponentQ.coerce(other) - self

    def __mul__(self, q):
        return exp_scale(q, self)

    __rmul__ = __mul__

    def __truediv__(self, q):
        return exp_scale(1 / as_fraction(q), self)

    def value(self, assignment: Mapping) -> complex:
        values = {_param(k).name: v for k, v in assignment.items()}
        total = complex(self.constant)
        for name, c in self.linear:
            if name not in values:
                raise KeyError(f"parameter {name!r} is not assigned")
            total += complex(c) * complex(values[name])
        return total

    def substitute(self, assignment: Mapping) -> "ExponentQ":
        values = {_param(k).name: as_fraction(v) for k, v in assignment.items()}
        const = self.constant
        lin = {}
        for name, c in self.linear:
            if name in values:
                const += c * values[name]
            else:
                lin[name] = c
        return ExponentQ(const, lin)

    def to_poly(self) -> PolyScalar:
        terms = {(): self.constant}
        for name, c in self.linear:
            terms[((name, 1),)] = c
        return PolyScalar(terms)

    def __repr__(self):
        return f"ExponentQ({self})"

    def __str__(self):
        parts = []
        if self.constant or not self.linear:
            parts.append(str(self.constant))
        for name, c in self.linear:
            body = name if abs(c) == 1 else f"{abs(c)}*{name}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)


def exp_add(a: ExponentQ, b: ExponentQ) -> ExponentQ:
    lin = dict(a.linear)
    for name, c in b.linear:
        lin[name] = lin.get(name, 0) + c
    return ExponentQ(a.constant + b.constant, lin)


def exp_scale(q: Number, a: ExponentQ) -> ExponentQ:
    q = as_fraction(q)
    return ExponentQ(q * a.constant, {n: q * c for n, c in a.linear})


@total_ordering
class ExpClass:
    """The formal eigenvalue ``e(x) = exp(2*pi*i*x)``.

    The constant part of ``x`` is kept reduced into ``[0, 1)``, so equality is
    congruence mod 1 with the parameter part compared exactly. Parameters are
    generic: ``e(alpha)`` is never the unit class.
    """

    __slots__ = ("exponent",)

    def __init__(self, exponent=0):
        x = ExponentQ.coerce(exponent)
        c = x.constant
        reduced = c - (c.numerator // c.denominator)
        object.__setattr__(self, "exponent", ExponentQ(reduced, dict(x.linear)))

    def __setattr__(self, key, value):
        raise AttributeError("ExpClass is immutable")

    def __eq__(self, other):
        if not isinstance(other, ExpClass):
            return NotImplemented
        return self.exponent == other.exponent

    def __hash__(self):
        return hash(("ExpClass", self.exponent))

    def sort_key(self):
        return (self.exponent.linear, self.exponent.constant)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __mul__(self, other):
        return class_mul(self, other)

    def __pow__(self, n: int):
        return ExpClass(exp_scale(n, self.exponent))

    def is_unity(self) -> bool:
        return self.exponent.is_constant() and self.exponent.constant == 0

    def parameters(self) -> frozenset:
        return self.exponent.parameters()

    def __repr__(self):
        return f"ExpClass({self})"

    def __str__(self):
        return f"e({self.exponent})"


UNIT = ExpClass(0)
MINUS_ONE = ExpClass(Fraction(1, 2))


def class_eq(x: ExpClass, y: ExpClass) -> bool:
    return x == y


def class_mul(x: ExpClass, y: ExpClass) -> ExpClass:
    return ExpClass(exp_add(x.exponent, y.exponent))


def class_inverse(x: ExpClass) -> ExpClass:
    return ExpClass(-x.exponent)


def eval_class(x: ExpClass, assignment: Mapping | None = None) -> complex:
    """Numeric value ``exp(2*pi*i*x)`` under a parameter assignment."""
    return cmath.exp(2j * cmath.pi * x.exponent.value(assignment or {}))


def parameters_of(values: Iterable) -> frozenset:
    out = frozenset()
    for v in values:
        out |= v.parameters()
    return out


class ClassMultiset:
    """Finite map ``ExpClass -> int`` with zero entries dropped.

    Used both for eigenvalue multiplicities of an actual monodromy
    (nonnegative) and for signed virtual multiplicities.
    """

    __slots__ = ("_counts",)

    def __init__(self, counts: Mapping | Iterable | None = None):
        out: dict = {}
        if counts is not None:
            pairs = counts.items() if isinstance(counts, Mapping) else ((c, 1) for c in counts)
            for c, n in pairs:
                if not isinstance(c, ExpClass):
                    c = ExpClass(c)
                out[c] = out.get(c, 0) + int(n)
        object.__setattr__(self, "_counts", {c: n for c, n in out.items() if n})

    def __setattr__(self, key, value):
        raise AttributeError("ClassMultiset is immutable")

    def __getitem__(self, c: ExpClass) -> int:
        return self._counts.get(c, 0)

    def __iter__(self):
        return iter(sorted(self._counts))

    def __len__(self):
        return len(self._counts)

    def items(self):
        return [(c, self._counts[c]) for c in sorted(self._counts)]

    def as_dict(self) -> dict:
        return dict(self._counts)

    def total(self) -> int:
        return sum(self._counts.values())

    def __eq__(self, other):
        if isinstance(other, ClassMultiset):
            return self._counts == other._counts
        if isinstance(other, Mapping):
            return self == ClassMultiset(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._counts.items()))

    def __add__(self, other: "ClassMultiset") -> "ClassMultiset":
        out = dict(self._counts)
        for c, n in other._counts.items():
            out[c] = out.get(c, 0) + n
        return ClassMultiset(out)

    def scale(self, k: int) -> "ClassMultiset":
        return ClassMultiset({c: k * n for c, n in self._counts.items()})

    def inverted(self) -> "ClassMultiset":
        return ClassMultiset({class_inverse(c): n for c, n in self._counts.items()})

    def without_unity(self) -> "ClassMultiset":
        return ClassMultiset({c: n for c, n in self._counts.items() if not c.is_unity()})

    def is_nonnegative(self) -> bool:
        return all(n > 0 for n in self._counts.values())

    def evaluate(self, assignment: Mapping | None = None) -> list:
        """Flat list of complex eigenvalues (nonnegative multiplicities only)."""
        if not self.is_nonnegative():
            raise ValueError("cannot list eigenvalues of a virtual multiset")
        return [eval_class(c, assignment) for c, n in self.items() for _ in range(n)]

    def __repr__(self):
        return f"ClassMultiset({self})"

    def __str__(self):
        return "{" + ", ".join(f"{c}: {n}" for c, n in self.items()) + "}"
