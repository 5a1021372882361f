"""Univariate quotient rings K[x]/(f) with f monic."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import InvalidRing, NotInvertible
from .base import Elem, Ring, Tri
from .poly import PolynomialRing


@dataclass(frozen=True)
class QuotientRing(Ring):
    base: PolynomialRing
    modulus: tuple
    kind = "quotient"
    zero_v = ()

    def __post_init__(self):
        if not isinstance(self.base, PolynomialRing) or self.base.nvars != 1:
            raise InvalidRing("quotient base must be a polynomial ring in one variable")
        mod = self.base.canonical(self.modulus)
        object.__setattr__(self, "modulus", mod)
        if not mod or mod[0][0][0] < 1:
            raise InvalidRing("quotient modulus must have degree >= 1")
        if mod[0][1] != self.base.base.one_v:
            raise InvalidRing("quotient modulus must be monic")

    @classmethod
    def of(cls, base: PolynomialRing, modulus) -> "QuotientRing":
        if isinstance(modulus, str):
            modulus = base(modulus)
        if isinstance(modulus, Elem):
            modulus = base(modulus).v
        return cls(base, modulus)

    @property
    def coeff_ring(self) -> Ring:
        return self.base.base

    @property
    def var(self) -> str:
        return self.base.variables[0]

    @property
    def deg(self) -> int:
        return self.modulus[0][0][0]

    @property
    def one_v(self):
        return self.base.one_v

    def describe(self):
        return f"{self.base.describe()}/({self.base.fmt(self.modulus)})"

    # dense helpers over the coefficient ring -----------------------------
    def _dense(self, x) -> list:
        K = self.coeff_ring
        n = max((e[0] for e, _ in x), default=-1)
        out = [K.zero_v] * (n + 1)
        for e, c in x:
            out[e[0]] = c
        return out

    def _sparse(self, dense) -> tuple:
        K = self.coeff_ring
        return tuple(((k,), c) for k, c in reversed(list(enumerate(dense))) if not K.is_zero(c))

    def reduce(self, x):
        K = self.coeff_ring
        n = self.deg
        if not x or x[0][0][0] < n:
            return x
        dense = self._dense(x)
        lower = [(e[0], c) for e, c in self.modulus[1:]]
        for k in range(len(dense) - 1, n - 1, -1):
            c = dense[k]
            if K.is_zero(c):
                continue
            dense[k] = K.zero_v
            for j, fc in lower:
                dense[k - n + j] = K.sub(dense[k - n + j], K.mul(c, fc))
        return self._sparse(dense[:n])

    # arithmetic -------------------------------------------------------------
    def add(self, x, y):
        return self.base.add(x, y)

    def neg(self, x):
        return self.base.neg(x)

    def mul(self, x, y):
        return self.reduce(self.base.mul(x, y))

    def from_int(self, n):
        return self.base.from_int(n)

    def canonical(self, x):
        return self.reduce(self.base.canonical(x))

    def half_v(self, x):
        return self.base.half_v(x)

    def chain(self):
        return (self,) + self.base.chain()

    def embed(self, sub, x):
        if sub == self:
            return x
        return self.reduce(self.base.embed(sub, x))

    def gen(self, name):
        return Elem(self, self.reduce(self.base.gen(name).v))

    def variable_names(self):
        return self.base.variable_names()

    # units -----------------------------------------------------------------
    def _xgcd(self, x):
        """(g, s) with s*x = g mod f and g monic gcd(x, f); needs a field of coefficients."""
        K = self.coeff_ring

        def trim(p):
            while p and K.is_zero(p[-1]):
                p.pop()
            return p

        def divmod_(a, b):
            a = a[:]
            q = [K.zero_v] * max(len(a) - len(b) + 1, 1)
            inv_lead = K.inv(b[-1])
            while len(trim(a)) >= len(b):
                shift = len(a) - len(b)
                c = K.mul(a[-1], inv_lead)
                q[shift] = c
                for i, bc in enumerate(b):
                    a[shift + i] = K.sub(a[shift + i], K.mul(c, bc))
            return trim(q), a

        def sub_mul(a, q, b):
            out = a[:] + [K.zero_v] * max(0, len(q) + len(b) - 1 - len(a))
            for i, qc in enumerate(q):
                for j, bc in enumerate(b):
                    out[i + j] = K.sub(out[i + j], K.mul(qc, bc))
            return trim(out)

        r0, r1 = trim(self._dense(self.modulus)), trim(self._dense(x))
        s0, s1 = [], [K.one_v]
        while r1:
            q, r = divmod_(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, sub_mul(s0, q, s1)
        lead_inv = K.inv(r0[-1])
        g = [K.mul(c, lead_inv) for c in r0]
        s = [K.mul(c, lead_inv) for c in s0]
        return g, self.reduce(self._sparse(s))

    def is_unit(self, x) -> Tri:
        if not x:
            return False
        K = self.coeff_ring
        if self.base.is_constant(x):
            # norm of a constant c is c^deg, so units of K are the only constant units
            return K.is_unit(self.base.constant_term(x))
        if K.is_field:
            g, _ = self._xgcd(x)
            return len(g) == 1
        return None

    def inv(self, x):
        K = self.coeff_ring
        if self.base.is_constant(x):
            return self.base.embed(K, K.inv(self.base.constant_term(x)))
        if not K.is_field:
            raise NotInvertible("inversion needs a field of coefficients")
        g, s = self._xgcd(x)
        if len(g) != 1:
            raise NotInvertible(f"{self.fmt(x)} is not a unit")
        return s

    def is_nilpotent(self, x) -> Tri:
        if not x:
            return True
        if self.coeff_ring.is_field:
            return not self.pow(x, self.deg)
        return None

    def is_regular(self, x) -> Tri:
        if self.coeff_ring.is_field:
            # finite-dimensional algebra: regular iff unit
            return self.is_unit(x)
        return None

    @property
    def is_integral(self):
        if self.deg == 1:
            return self.coeff_ring.is_integral
        return None

    def fmt(self, x):
        return self.base.fmt(x)
