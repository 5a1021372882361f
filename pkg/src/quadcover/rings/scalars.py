"""The two ground rings: the rationals and Z/m with m odd."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..errors import InvalidRing, NotInvertible
from .base import Ring, Tri


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def radical(n: int) -> int:
    rad, f = 1, 2
    while f * f <= n:
        if n % f == 0:
            rad *= f
            while n % f == 0:
                n //= f
        f += 1
    return rad * n if n > 1 else rad


@dataclass(frozen=True)
class RationalField(Ring):
    kind = "rational"
    zero_v = Fraction(0)
    one_v = Fraction(1)

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def from_int(self, n):
        return Fraction(n)

    def from_fraction(self, q):
        return Fraction(q)

    def canonical(self, x):
        return Fraction(x)

    def is_unit(self, x) -> Tri:
        return x != 0

    def inv(self, x):
        if x == 0:
            raise NotInvertible("0 has no inverse")
        return 1 / x

    def half_v(self, x):
        return x / 2

    def is_nilpotent(self, x) -> Tri:
        return x == 0

    def is_regular(self, x) -> Tri:
        return x != 0

    @property
    def is_field(self):
        return True

    @property
    def is_integral(self):
        return True

    def fmt(self, x):
        return str(x)

    def describe(self):
        return "QQ"


@dataclass(frozen=True)
class ModularRing(Ring):
    m: int
    kind = "modular"
    zero_v = 0
    one_v = 1

    def __post_init__(self):
        if not isinstance(self.m, int) or isinstance(self.m, bool):
            raise InvalidRing("modulus must be an integer")
        if self.m < 3 or self.m % 2 == 0:
            raise InvalidRing(f"modulus must be odd and >= 3 (2 must be invertible), got {self.m}")

    def add(self, x, y):
        return (x + y) % self.m

    def neg(self, x):
        return -x % self.m

    def sub(self, x, y):
        return (x - y) % self.m

    def mul(self, x, y):
        return x * y % self.m

    def from_int(self, n):
        return n % self.m

    def canonical(self, x):
        return x % self.m

    def is_unit(self, x) -> Tri:
        return math.gcd(x, self.m) == 1

    def inv(self, x):
        try:
            return pow(x, -1, self.m)
        except ValueError:
            raise NotInvertible(f"{x} is not a unit mod {self.m}") from None

    def half_v(self, x):
        return x * ((self.m + 1) // 2) % self.m

    def is_nilpotent(self, x) -> Tri:
        return x % self._radical == 0

    def is_regular(self, x) -> Tri:
        # in Z/m the nonzerodivisors are exactly the units
        return math.gcd(x, self.m) == 1

    @property
    def _radical(self):
        r = self.__dict__.get("_rad")
        if r is None:
            r = radical(self.m)
            object.__setattr__(self, "_rad", r)
        return r

    @property
    def is_field(self):
        p = self.__dict__.get("_prime")
        if p is None:
            p = is_prime(self.m)
            object.__setattr__(self, "_prime", p)
        return p

    @property
    def is_integral(self):
        return self.is_field

    def fmt(self, x):
        return str(x)

    def describe(self):
        return f"Z/{self.m}"


QQ = RationalField()
