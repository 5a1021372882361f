"""JSON descriptors for rings and elements, and an expression parser.

Descriptor format::

    {"kind": "rational"}
    {"kind": "modular", "m": 15}
    {"kind": "polynomial", "base": {...}, "vars": ["T1", "T2"]}
    {"kind": "quotient", "base": {"kind": "polynomial", ..., "vars": ["T"]}, "modulus": "T^2-5"}

Scalar elements serialize as strings (``"-1"``, ``"1/4"``); polynomial and
quotient elements as sparse lists ``[[exponents, coeff], ...]``.  On input
an element may also be an integer or an expression string.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Any

from ..errors import InvalidRing, PreconditionError
from .base import Elem, Ring
from .poly import PolynomialRing
from .quotient import QuotientRing
from .scalars import QQ, ModularRing, RationalField


def ring_to_json(ring: Ring) -> dict:
    if isinstance(ring, RationalField):
        return {"kind": "rational"}
    if isinstance(ring, ModularRing):
        return {"kind": "modular", "m": ring.m}
    if isinstance(ring, PolynomialRing):
        return {"kind": "polynomial", "base": ring_to_json(ring.base), "vars": list(ring.variables)}
    if isinstance(ring, QuotientRing):
        return {"kind": "quotient", "base": ring_to_json(ring.base), "modulus": ring.base.fmt(ring.modulus)}
    raise InvalidRing(f"unknown ring {ring!r}")


def ring_from_json(obj: Any) -> Ring:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise InvalidRing("ring descriptor must be an object with a 'kind' field")
    kind = obj["kind"]
    if kind == "rational":
        return QQ
    if kind == "modular":
        m = obj.get("m")
        if not isinstance(m, int) or isinstance(m, bool):
            raise InvalidRing("modular descriptor needs an integer 'm'")
        return ModularRing(m)
    if kind == "polynomial":
        names = obj.get("vars")
        if not isinstance(names, list) or not all(isinstance(v, str) and _IDENT.fullmatch(v) for v in names):
            raise InvalidRing("polynomial descriptor needs a list of identifier 'vars'")
        return PolynomialRing(ring_from_json(obj.get("base", {"kind": "rational"})), tuple(names))
    if kind == "quotient":
        base = ring_from_json(obj.get("base"))
        if not isinstance(base, PolynomialRing):
            # shorthand: coefficient ring plus a variable name
            base = PolynomialRing(base, (obj.get("var", "T"),))
        modulus = obj.get("modulus")
        if modulus is None:
            raise InvalidRing("quotient descriptor needs a 'modulus'")
        return QuotientRing.of(base, element_from_json(base, modulus))
    raise InvalidRing(f"unknown ring kind {kind!r}")


def element_to_json(x: Elem):
    ring = x.ring
    if isinstance(ring, (RationalField, ModularRing)):
        return ring.fmt(x.v)
    poly = ring.base if isinstance(ring, QuotientRing) else ring
    return [[list(e), element_to_json(Elem(poly.base, c))] for e, c in x.v]


def element_from_json(ring: Ring, obj: Any) -> Elem:
    if isinstance(obj, Elem):
        return ring(obj)
    if isinstance(obj, bool) or obj is None:
        raise PreconditionError(f"not a ring element: {obj!r}")
    if isinstance(obj, int):
        return ring(obj)
    if isinstance(obj, str):
        return parse_element(ring, obj)
    if isinstance(obj, list):
        poly = ring.base if isinstance(ring, QuotientRing) else ring
        if not isinstance(poly, PolynomialRing):
            raise PreconditionError("sparse term lists need a polynomial or quotient ring")
        terms = []
        for item in obj:
            if not (isinstance(item, list) and len(item) == 2 and isinstance(item[0], list)):
                raise PreconditionError(f"malformed term {item!r}")
            exps, coeff = item
            if not all(isinstance(k, int) and not isinstance(k, bool) for k in exps):
                raise PreconditionError(f"malformed exponents {exps!r}")
            terms.append((exps, element_from_json(poly.base, coeff).v))
        v = poly.from_terms(terms)
        return Elem(ring, ring.canonical(v) if ring is not poly else v)
    raise PreconditionError(f"not a ring element: {obj!r}")


# expression parser ------------------------------------------------------------

_NUMBER = re.compile(r"[-+]?\d+(/[1-9]\d*)?")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise PreconditionError(f"unexpected character at {pos} in {text!r}")
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("num", num))
        elif name is not None:
            tokens.append(("name", name))
        else:
            tokens.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, ring: Ring, text: str):
        self.ring = ring
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value):
            raise PreconditionError(f"parse error in {self.text!r}: expected {value or 'token'}")
        self.i += 1
        return tok

    def parse(self) -> Elem:
        if not self.tokens:
            raise PreconditionError("empty expression")
        out = self.expr()
        if self.i != len(self.tokens):
            raise PreconditionError(f"trailing input in {self.text!r}")
        return out

    def expr(self):
        val = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            rhs = self.unary()
            val = val * rhs if op == "*" else val / rhs
        return val

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, tok = self.take()
            if kind != "num":
                raise PreconditionError(f"exponent must be a nonnegative integer in {self.text!r}")
            return base ** int(tok)
        return base

    def atom(self):
        kind, tok = self.take()
        if kind == "num":
            return self.ring(int(tok))
        if kind == "name":
            try:
                return self.ring.gen(tok)
            except KeyError:
                raise PreconditionError(f"unknown variable {tok!r} for {self.ring.describe()}") from None
        if tok == "(":
            val = self.expr()
            self.take(")")
            return val
        raise PreconditionError(f"parse error in {self.text!r} at {tok!r}")


def parse_element(ring: Ring, text: str) -> Elem:
    """Parse ``text`` (integers, variables, + - * / ^, parentheses) into ``ring``."""
    if isinstance(ring, (RationalField, ModularRing)):
        # fast path for plain numbers such as "-3/4"
        if _NUMBER.fullmatch(text.strip()):
            return ring(Fraction(text.strip()))
    return _Parser(ring, text).parse()
