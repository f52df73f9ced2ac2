"""Recursive-descent parser and canonical printer.

Operator grammar::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^' nat]
    atom   := nat | nat '/' nat | ident | 'z' | 'd' | 'th' | '(' expr ')'

On the w-side the variable letter is ``w`` instead of ``z``. Products are
noncommutative and evaluated left to right; ``th`` is ``z*d``. Every other
identifier except the reserved ``e`` and ``t`` is a formal parameter.
Implicit multiplication is rejected.

The same expression grammar (without z/d/th) reads exponents such as
``-3*a + 1/3``; eigenvalue classes are written ``e(<exponent>)`` and zeta
functions as ``*``-separated products of ``e(x)``, ``t^k`` and
``(1 - e(x)*t^m)^k``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .scalars import RESERVED_NAMES, ExpClass, ExponentQ, PolyScalar, mono_str
from .weyl import WeylOp

RESERVED = RESERVED_NAMES


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.position = position


# ---------------------------------------------------------------- tokens

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "ident", "op", "end"
    text: str
    pos: int


def tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m.group(1) is not None:
            tokens.append(Token("num", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(Token("ident", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", m.start(3))
            tokens.append(Token("op", ch, m.start(3)))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


# ---------------------------------------------------------------- AST


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Sym:
    name: str
    pos: int


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


Node = Union[Num, Sym, Neg, BinOp, Pow]
OperatorExpr = Node


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def accept(self, op: str) -> bool:
        if self.tok.kind == "op" and self.tok.text == op:
            self.i += 1
            return True
        return False

    def expect(self, op: str):
        if not self.accept(op):
            self.fail(f"expected {op!r}")

    def fail(self, message: str):
        t = self.tok
        found = "end of input" if t.kind == "end" else repr(t.text)
        raise ParseError(f"{message}, found {found}", t.pos)

    def expect_end(self):
        if self.tok.kind != "end":
            if self.tok.kind in ("ident", "num") or self.tok.text == "(":
                self.fail("implicit multiplication is not allowed; use '*'")
            self.fail("unexpected token")

    def nat(self) -> int:
        if self.tok.kind != "num":
            self.fail("exponent must be a nonnegative integer literal")
        return int(self.advance().text)

    def expr(self) -> Node:
        if self.accept("-"):
            node: Node = Neg(self.term())
        else:
            node = self.term()
        while True:
            if self.accept("+"):
                node = BinOp("+", node, self.term())
            elif self.accept("-"):
                node = BinOp("-", node, self.term())
            else:
                return node

    def term(self) -> Node:
        node = self.factor()
        while self.accept("*"):
            node = BinOp("*", node, self.factor())
        return node

    def factor(self) -> Node:
        node = self.atom()
        if self.accept("^"):
            node = Pow(node, self.nat())
        return node

    def atom(self) -> Node:
        t = self.tok
        if t.kind == "num":
            self.advance()
            value = Fraction(int(t.text))
            if self.accept("/"):
                if self.tok.kind != "num":
                    self.fail("expected a natural-number denominator")
                den = int(self.advance().text)
                if den == 0:
                    raise ParseError("zero denominator", self.tokens[self.i - 1].pos)
                value = Fraction(int(t.text), den)
            return Num(value)
        if t.kind == "ident":
            self.advance()
            return Sym(t.text, t.pos)
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        self.fail("expected a number, identifier or '('")


def parse_expression(text: str) -> Node:
    p = _Parser(text)
    node = p.expr()
    p.expect_end()
    return node


# ---------------------------------------------------------------- evaluation


def _eval_operator(node: Node, side: str) -> WeylOp:
    if isinstance(node, Num):
        return WeylOp.const(node.value, side)
    if isinstance(node, Sym):
        if node.name == side:
            return WeylOp.var(side)
        if node.name == "d":
            return WeylOp.deriv(side)
        if node.name == "th":
            return WeylOp.euler(side)
        if node.name in RESERVED:
            raise ParseError(f"{node.name!r} is reserved and not allowed on the {side}-side", node.pos)
        return WeylOp.const(PolyScalar.param(node.name), side)
    if isinstance(node, Neg):
        return -_eval_operator(node.operand, side)
    if isinstance(node, Pow):
        return _eval_operator(node.base, side) ** node.exponent
    left = _eval_operator(node.left, side)
    right = _eval_operator(node.right, side)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    return left * right


def _eval_scalar(node: Node) -> PolyScalar:
    if isinstance(node, Num):
        return PolyScalar.const(node.value)
    if isinstance(node, Sym):
        if node.name in RESERVED:
            raise ParseError(f"{node.name!r} cannot appear in a scalar expression", node.pos)
        return PolyScalar.param(node.name)
    if isinstance(node, Neg):
        return -_eval_scalar(node.operand)
    if isinstance(node, Pow):
        return _eval_scalar(node.base) ** node.exponent
    left, right = _eval_scalar(node.left), _eval_scalar(node.right)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    return left * right


def parse_operator(text: str, side: str = "z") -> WeylOp:
    return _eval_operator(parse_expression(text), side)


def parse_scalar(text: str) -> PolyScalar:
    return _eval_scalar(parse_expression(text))


def parse_exponent(text: str) -> ExponentQ:
    value = parse_scalar(text)
    try:
        return value.as_exponent()
    except ValueError as exc:
        raise ParseError(str(exc), 0) from None


def parse_class(text: str) -> ExpClass:
    s = text.strip()
    if not (s.startswith("e(") and s.endswith(")")):
        raise ParseError("eigenvalue class must look like e(<exponent>)", 0)
    return ExpClass(parse_exponent(s[2:-1]))


# ---------------------------------------------------------------- printing


def _op_term(c: Fraction, mono, j: int, k: int, side: str):
    parts = []
    if mono:
        parts.append(mono_str(mono))
    if j:
        parts.append(side if j == 1 else f"{side}^{j}")
    if k:
        parts.append("d" if k == 1 else f"d^{k}")
    a = abs(c)
    if a != 1 or not parts:
        parts.insert(0, str(a))
    return (c < 0), "*".join(parts)


def print_operator(P: WeylOp) -> str:
    """Canonical expanded rendering; ``parse_operator(print_operator(P)) == P``."""
    pieces = []
    for (j, k), coeff in P.items():
        for mono, c in coeff.items():
            pieces.append(_op_term(c, mono, j, k, P.side))
    if not pieces:
        return "0"
    out = []
    for i, (neg, body) in enumerate(pieces):
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def print_exponent(x: ExponentQ) -> str:
    return str(x)


def print_class(x: ExpClass) -> str:
    return str(x)


# ---------------------------------------------------------------- zeta literals


def parse_zeta(text: str):
    """Read a factored zeta function such as ``e(1/2)*t^-1*(1 - e(-a)*t^3)^-2``."""
    p = _ZetaParser(text)
    z = p.product()
    p.expect_end()
    return z


class _ZetaParser(_Parser):
    def signed_int(self) -> int:
        neg = self.accept("-")
        if self.tok.kind != "num":
            self.fail("expected an integer")
        n = int(self.advance().text)
        return -n if neg else n

    def product(self):
        # a bare single factor "1 - c*t^m" without parentheses
        nxt = self.tokens[self.i + 1] if self.i + 1 < len(self.tokens) else None
        if self.tok.text == "1" and nxt is not None and nxt.text in ("+", "-"):
            return self.factor_body()
        z = self.item()
        while self.accept("*"):
            z = z * self.item()
        return z

    def item(self):
        from .zeta import ZetaFunction

        t = self.tok
        if t.kind == "num" and t.text == "1":
            self.advance()
            return ZetaFunction.one()
        if t.kind == "ident" and t.text == "t":
            self.advance()
            k = self.signed_int() if self.accept("^") else 1
            return ZetaFunction(power=k)
        if t.kind == "ident" and t.text == "e":
            return ZetaFunction(lead=self.eclass())
        if self.accept("("):
            f = self.factor_body()
            self.expect(")")
            if self.accept("^"):
                f = f ** self.signed_int()
            return f
        self.fail("expected 1, t, e(...) or a parenthesised factor")

    def eclass(self) -> ExpClass:
        t = self.tok
        if not (t.kind == "ident" and t.text == "e"):
            self.fail("expected e(...)")
        self.advance()
        self.expect("(")
        node = self.expr()
        self.expect(")")
        try:
            return ExpClass(_eval_scalar(node).as_exponent())
        except ValueError as exc:
            raise ParseError(str(exc), t.pos) from None

    def factor_body(self):
        from .scalars import MINUS_ONE, UNIT
        from .zeta import ZetaFunction

        if not (self.tok.kind == "num" and self.tok.text == "1"):
            self.fail("a zeta factor must start with '1'")
        self.advance()
        if self.accept("-"):
            c = UNIT
        elif self.accept("+"):
            c = MINUS_ONE
        else:
            self.fail("expected '-' or '+'")
        if self.tok.kind == "ident" and self.tok.text == "e":
            c = c * self.eclass()
            self.expect("*")
        if not (self.tok.kind == "ident" and self.tok.text == "t"):
            self.fail("expected t")
        self.advance()
        m = self.nat() if self.accept("^") else 1
        if m < 1:
            raise ParseError("t-power in a factor must be positive", self.tokens[self.i - 1].pos)
        return ZetaFunction.factor(c, m)
