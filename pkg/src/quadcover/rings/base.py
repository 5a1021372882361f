"""Ring protocol and the element wrapper.

A ring object knows how to operate on raw *payloads* (``Fraction``, ``int``,
tuples of terms); :class:`Elem` pairs a payload with its ring and supplies
the Python operators.  Payloads are always canonical, so structural equality
is semantic equality.

Properties that may be undecidable over part of the ring menu (unit,
nilpotent, regular) are answered with ``True``, ``False`` or ``None``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Optional

from ..errors import NotInvertible, RingMismatch, Undecided

Tri = Optional[bool]


def and3(*flags: Tri) -> Tri:
    if any(f is False for f in flags):
        return False
    if any(f is None for f in flags):
        return None
    return True


def or3(*flags: Tri) -> Tri:
    if any(f is True for f in flags):
        return True
    if any(f is None for f in flags):
        return None
    return False


class Ring:
    """Abstract commutative ring in which 2 is a unit."""

    kind: str = "abstract"
    zero_v: Any
    one_v: Any

    # payload level -------------------------------------------------------
    def add(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def from_int(self, n: int):
        raise NotImplementedError

    def is_zero(self, x) -> bool:
        return x == self.zero_v

    def is_unit(self, x) -> Tri:
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def is_nilpotent(self, x) -> Tri:
        raise NotImplementedError

    def is_regular(self, x) -> Tri:
        raise NotImplementedError

    def fmt(self, x) -> str:
        raise NotImplementedError

    def canonical(self, x):
        """Re-canonicalize a payload; identity on canonical input."""
        return x

    @property
    def is_field(self) -> bool:
        return False

    @property
    def is_integral(self) -> Tri:
        return None

    def chain(self) -> tuple["Ring", ...]:
        """This ring followed by its coefficient rings, innermost last."""
        return (self,)

    def has_subring(self, other: "Ring") -> bool:
        return any(r == other for r in self.chain())

    def embed(self, sub: "Ring", x):
        if sub == self:
            return x
        raise RingMismatch(f"cannot embed {sub.describe()} into {self.describe()}")

    def gen(self, name: str) -> "Elem":
        raise KeyError(name)

    def variable_names(self) -> tuple[str, ...]:
        return ()

    def describe(self) -> str:
        return self.kind

    def pow(self, x, k: int):
        if k < 0:
            return self.pow(self.inv(x), -k)
        result = self.one_v
        base = x
        while k:
            if k & 1:
                result = self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return result

    def half_v(self, x):
        return self.mul(x, self._half_unit())

    def _half_unit(self):
        cached = self.__dict__.get("_half_cache")
        if cached is None:
            cached = self.inv(self.from_int(2))
            object.__setattr__(self, "_half_cache", cached)
        return cached

    # element level -------------------------------------------------------
    def __call__(self, value: Any = 0) -> "Elem":
        if isinstance(value, Elem):
            if value.ring == self:
                return value
            return Elem(self, self.embed(value.ring, value.v))
        if isinstance(value, bool):
            raise TypeError("booleans are not ring elements")
        if isinstance(value, int):
            return Elem(self, self.from_int(value))
        if isinstance(value, Fraction):
            return Elem(self, self.from_fraction(value))
        if isinstance(value, str):
            from .serialize import parse_element

            return parse_element(self, value)
        raise TypeError(f"cannot convert {type(value).__name__} to a ring element")

    def from_fraction(self, q: Fraction):
        num = self.from_int(q.numerator)
        if q.denominator == 1:
            return num
        den = self.from_int(q.denominator)
        if self.is_unit(den) is not True:
            raise NotInvertible(f"denominator {q.denominator} is not a unit in {self.describe()}")
        return self.mul(num, self.inv(den))

    def zero(self) -> "Elem":
        return Elem(self, self.zero_v)

    def one(self) -> "Elem":
        return Elem(self, self.one_v)


class Elem:
    """Immutable ring element."""

    __slots__ = ("ring", "v")

    def __init__(self, ring: Ring, v: Any):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "v", v)

    def __setattr__(self, name, value):
        raise AttributeError("Elem is immutable")

    # coercion ------------------------------------------------------------
    def _lift(self, other) -> tuple[Ring, Any, Any]:
        ring = self.ring
        if isinstance(other, Elem):
            oring = other.ring
            if oring is ring or oring == ring:
                return ring, self.v, other.v
            if ring.has_subring(oring):
                return ring, self.v, ring.embed(oring, other.v)
            if oring.has_subring(ring):
                return oring, oring.embed(ring, self.v), other.v
            raise RingMismatch(f"{ring.describe()} vs {oring.describe()}")
        if isinstance(other, bool):
            raise TypeError("booleans are not ring elements")
        if isinstance(other, int):
            return ring, self.v, ring.from_int(other)
        if isinstance(other, Fraction):
            return ring, self.v, ring.from_fraction(other)
        raise TypeError(f"unsupported operand {type(other).__name__}")

    def __add__(self, other):
        try:
            ring, x, y = self._lift(other)
        except TypeError:
            return NotImplemented
        return Elem(ring, ring.add(x, y))

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        try:
            ring, x, y = self._lift(other)
        except TypeError:
            return NotImplemented
        return Elem(ring, ring.sub(x, y))

    def __rsub__(self, other):
        try:
            ring, x, y = self._lift(other)
        except TypeError:
            return NotImplemented
        return Elem(ring, ring.sub(y, x))

    def __mul__(self, other):
        try:
            ring, x, y = self._lift(other)
        except TypeError:
            return NotImplemented
        return Elem(ring, ring.mul(x, y))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __neg__(self):
        return Elem(self.ring, self.ring.neg(self.v))

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        return Elem(self.ring, self.ring.pow(self.v, k))

    def __truediv__(self, other):
        try:
            ring, x, y = self._lift(other)
        except TypeError:
            return NotImplemented
        return Elem(ring, ring.mul(x, _checked_inv(ring, y)))

    def __rtruediv__(self, other):
        try:
            ring, x, y = self._lift(other)
        except TypeError:
            return NotImplemented
        return Elem(ring, ring.mul(y, _checked_inv(ring, x)))

    def __eq__(self, other):
        try:
            _, x, y = self._lift(other)
        except (TypeError, RingMismatch, NotInvertible):
            return False
        return x == y

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.ring, self.v))

    def __bool__(self):
        return not self.ring.is_zero(self.v)

    def __repr__(self):
        return f"Elem({self.ring.describe()}, {self.ring.fmt(self.v)})"

    def __str__(self):
        return self.ring.fmt(self.v)

    # ring-specific conveniences -------------------------------------------
    def is_zero(self) -> bool:
        return self.ring.is_zero(self.v)

    def half(self) -> "Elem":
        return Elem(self.ring, self.ring.half_v(self.v))

    def is_unit(self) -> Tri:
        return self.ring.is_unit(self.v)

    def is_nilpotent(self) -> Tri:
        return self.ring.is_nilpotent(self.v)

    def is_regular(self) -> Tri:
        return self.ring.is_regular(self.v)

    def inv(self) -> "Elem":
        return Elem(self.ring, _checked_inv(self.ring, self.v))

    def to_json(self):
        from .serialize import element_to_json

        return element_to_json(self)


def _checked_inv(ring: Ring, x):
    flag = ring.is_unit(x)
    if flag is False:
        raise NotInvertible(f"{ring.fmt(x)} is not a unit in {ring.describe()}")
    if flag is None:
        raise Undecided(f"cannot decide whether {ring.fmt(x)} is a unit in {ring.describe()}")
    return ring.inv(x)
