"""Sparse multivariate polynomials in lexicographic order.

Payload: a tuple of ``(exponents, coeff)`` pairs sorted by descending
exponent tuple, so the first term is the lex-leading term with respect to
the declared variable order.  ``coeff`` is a payload of the base ring and
is never zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping

from ..errors import InvalidRing, NotInvertible, PreconditionError, RingMismatch
from .base import Elem, Ring, Tri, and3
from .scalars import ModularRing


@dataclass(frozen=True)
class PolynomialRing(Ring):
    base: Ring
    variables: tuple[str, ...]
    kind = "polynomial"
    zero_v = ()

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if not self.variables:
            raise InvalidRing("a polynomial ring needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise InvalidRing("duplicate variable names")
        clash = set(self.variables) & set(self.base.variable_names())
        if clash:
            raise InvalidRing(f"variables {sorted(clash)} already used by the coefficient ring")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def one_v(self):
        return (((0,) * self.nvars, self.base.one_v),)

    # construction helpers ------------------------------------------------
    def _freeze(self, d: Mapping) -> tuple:
        return tuple(sorted(d.items(), key=lambda t: t[0], reverse=True))

    def from_terms(self, terms: Iterable) -> tuple:
        """Canonical payload from (exponents, base payload) pairs; merges duplicates."""
        B = self.base
        d: dict = {}
        for e, c in terms:
            e = tuple(e)
            if len(e) != self.nvars:
                raise PreconditionError(f"exponent vector {e} has wrong length")
            if any(k < 0 for k in e):
                raise PreconditionError("negative exponent")
            c = B.canonical(c)
            if e in d:
                c = B.add(d[e], c)
            if B.is_zero(c):
                d.pop(e, None)
            else:
                d[e] = c
        return self._freeze(d)

    def monomial(self, exps, coeff=None) -> Elem:
        c = self.base.one_v if coeff is None else coeff
        return Elem(self, self.from_terms([(exps, c)]))

    def gen(self, name: str) -> Elem:
        if name in self.variables:
            e = [0] * self.nvars
            e[self.variables.index(name)] = 1
            return self.monomial(e)
        inner = self.base.gen(name)
        return Elem(self, self.embed(self.base, inner.v))

    def gens(self) -> tuple[Elem, ...]:
        return tuple(self.gen(v) for v in self.variables)

    def variable_names(self):
        return self.variables + self.base.variable_names()

    def chain(self):
        return (self,) + self.base.chain()

    def embed(self, sub, x):
        if sub == self:
            return x
        c = self.base.embed(sub, x)
        if self.base.is_zero(c):
            return ()
        return (((0,) * self.nvars, c),)

    def constant(self, c) -> Elem:
        """Lift an element of the coefficient ring (or an int)."""
        return self(c)

    def describe(self):
        return f"{self.base.describe()}[{','.join(self.variables)}]"

    # arithmetic ------------------------------------------------------------
    def add(self, x, y):
        if not x:
            return y
        if not y:
            return x
        B = self.base
        d = dict(x)
        for e, c in y:
            if e in d:
                s = B.add(d[e], c)
                if B.is_zero(s):
                    del d[e]
                else:
                    d[e] = s
            else:
                d[e] = c
        return self._freeze(d)

    def neg(self, x):
        B = self.base
        return tuple((e, B.neg(c)) for e, c in x)

    def mul(self, x, y):
        if not x or not y:
            return ()
        B = self.base
        d: dict = {}
        for e1, c1 in x:
            for e2, c2 in y:
                e = tuple(a + b for a, b in zip(e1, e2))
                c = B.mul(c1, c2)
                if e in d:
                    d[e] = B.add(d[e], c)
                else:
                    d[e] = c
        return self._freeze({e: c for e, c in d.items() if not B.is_zero(c)})

    def scale(self, x, c):
        """Multiply by a base-ring payload."""
        B = self.base
        out = []
        for e, k in x:
            p = B.mul(k, c)
            if not B.is_zero(p):
                out.append((e, p))
        return tuple(out)

    def from_int(self, n):
        c = self.base.from_int(n)
        if self.base.is_zero(c):
            return ()
        return (((0,) * self.nvars, c),)

    def canonical(self, x):
        return self.from_terms(x)

    def half_v(self, x):
        B = self.base
        return tuple((e, B.half_v(c)) for e, c in x)

    # structure ---------------------------------------------------------------
    def constant_term(self, x):
        zero_e = (0,) * self.nvars
        for e, c in x:
            if e == zero_e:
                return c
        return self.base.zero_v

    def is_constant(self, x) -> bool:
        return all(not any(e) for e, _ in x)

    def degree(self, x) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e, _ in x), default=-1)

    def degree_in(self, x, var: str) -> int:
        i = self.variables.index(var)
        return max((e[i] for e, _ in x), default=-1)

    def is_unit(self, x) -> Tri:
        # u + nilpotent, with u a unit of the coefficient ring
        if not x:
            return False
        const = self.constant_term(x)
        others = [c for e, c in x if any(e)]
        return and3(self.base.is_unit(const), *(self.base.is_nilpotent(c) for c in others))

    def inv(self, x):
        if self.is_constant(x):
            return self.embed(self.base, self.base.inv(self.constant_term(x)))
        flag = self.is_unit(x)
        if flag is not True:
            raise NotInvertible(f"{self.fmt(x)} is not (decidably) a unit")
        # x = u(1 + n) with n nilpotent: invert by a finite geometric series
        u_inv = self.embed(self.base, self.base.inv(self.constant_term(x)))
        n = self.sub(self.mul(x, u_inv), self.one_v)
        term, total = self.one_v, self.one_v
        while True:
            term = self.neg(self.mul(term, n))
            if not term:
                break
            total = self.add(total, term)
        return self.mul(total, u_inv)

    def is_nilpotent(self, x) -> Tri:
        return and3(*(self.base.is_nilpotent(c) for _, c in x))

    def is_regular(self, x) -> Tri:
        if not x:
            return False
        if self.base.is_integral is True:
            return True
        if isinstance(self.base, ModularRing):
            # McCoy: f is a zero divisor iff some nonzero constant kills it
            g = self.base.m
            for _, c in x:
                g = math.gcd(g, c)
            return g == 1
        return None

    @property
    def is_integral(self):
        return self.base.is_integral

    # substitution ----------------------------------------------------------
    def evaluate(self, x, values: Mapping[str, Elem], target: Ring | None = None) -> Elem:
        """Evaluate at ``values`` (variable name -> Elem); unassigned variables are an error."""
        missing = [v for i, v in enumerate(self.variables) if any(e[i] for e, _ in x) and v not in values]
        if missing:
            raise PreconditionError(f"no value assigned to {missing}")
        vals = [values.get(v) for v in self.variables]
        if target is None:
            rings = [v.ring for v in vals if v is not None]
            target = self.base
            for r in rings:
                if r.has_subring(target):
                    target = r
                elif not target.has_subring(r):
                    raise RingMismatch(f"cannot combine {r.describe()} with {target.describe()}")
        total = target.zero()
        powers: dict = {}
        for e, c in x:
            term = target(Elem(self.base, c))
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in powers:
                        powers[key] = target(vals[i]) ** k
                    term = term * powers[key]
            total = total + term
        return total

    def permute(self, x, perm: tuple[int, ...]):
        """Apply the variable permutation T_i -> T_perm[i]."""
        out = []
        for e, c in x:
            ne = [0] * self.nvars
            for i, k in enumerate(e):
                ne[perm[i]] = k
            out.append((tuple(ne), c))
        return self._freeze(dict(out))

    def divexact(self, x, y):
        """Exact multivariate division; raises if ``y`` does not divide ``x``."""
        if not y:
            raise ZeroDivisionError("division by the zero polynomial")
        B = self.base
        ly, cy = y[0]
        cy_inv = B.inv(cy)
        rest = y[1:]
        remaining = dict(x)
        quotient: dict = {}
        while remaining:
            lx = max(remaining)
            cx = remaining[lx]
            shift = tuple(a - b for a, b in zip(lx, ly))
            if any(k < 0 for k in shift):
                raise PreconditionError("division leaves a nonzero remainder")
            q = B.mul(cx, cy_inv)
            quotient[shift] = q
            del remaining[lx]
            for e, c in rest:
                ne = tuple(a + b for a, b in zip(e, shift))
                val = B.sub(remaining.get(ne, B.zero_v), B.mul(q, c))
                if B.is_zero(val):
                    remaining.pop(ne, None)
                else:
                    remaining[ne] = val
        return self._freeze(quotient)

    # formatting --------------------------------------------------------------
    def _monomial_str(self, e) -> str:
        parts = []
        for v, k in zip(self.variables, e):
            if k == 1:
                parts.append(v)
            elif k > 1:
                parts.append(f"{v}^{k}")
        return "*".join(parts)

    def fmt(self, x) -> str:
        if not x:
            return "0"
        B = self.base
        compound = isinstance(B, PolynomialRing) or B.kind == "quotient"
        one, minus_one = B.one_v, B.neg(B.one_v)
        pieces = []
        for e, c in x:
            mono = self._monomial_str(e)
            if not mono:
                term = B.fmt(c)
                if compound and _needs_parens(term):
                    term = f"({term})"
            elif c == one:
                term = mono
            elif c == minus_one:
                term = "-" + mono
            else:
                cs = B.fmt(c)
                if compound and _needs_parens(cs):
                    cs = f"({cs})"
                term = f"{cs}*{mono}"
            pieces.append(term)
        out = pieces[0]
        for p in pieces[1:]:
            out += p if p.startswith("-") else "+" + p
        return out


def _needs_parens(s: str) -> bool:
    return "+" in s or "-" in s[1:]
