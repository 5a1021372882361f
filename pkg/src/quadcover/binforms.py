"""Binary quadratic forms and the double cover they define.

A form on E = R·e1 ⊕ R·e2 valued in a trivialized line is a linear map
ψ on Sym²(E), recorded by (a, b, c) = (ψ(e1²), ψ(e1e2), ψ(e2²)).  The
quadratic map is q(v) = ½ψ(v²), so q(x, y) = ½(ax² + 2bxy + cy²).

Orientation: e1∧e2 is the positive basis of Λ²E and the identification
E ≅ Hom(E, Λ²E) is y ↦ (x ↦ x∧y).  The action of α on E is then pinned
down by x∧αy = ½ψ(xy)·e1∧e2, which gives the matrix ½[[-b, -c], [a, b]].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional, Sequence

from . import matrix as mx
from .errors import PreconditionError, VerificationError
from .quadalg import QuadraticAlgebra, _t_poly
from .rings import Elem, ModularRing, PolynomialRing, Ring, or3
from .rings.base import Tri

CONVENTIONS = ("phi", "gamma2b")


@dataclass(frozen=True)
class BinaryForm:
    """(a, b, c) = (ψ(e1²), ψ(e1e2), ψ(e2²)).

    ``gamma2b`` tags a triple read off the homogeneous quadratic
    a·x² + 2b·xy + c·y²; since ψ((xe1 + ye2)²) has exactly that shape the
    numbers coincide and :meth:`to_phi` only retags.
    """

    ring: Ring
    a: Elem
    b: Elem
    c: Elem
    convention: str = "phi"

    def __post_init__(self):
        if self.convention not in CONVENTIONS:
            raise PreconditionError(f"unknown convention {self.convention!r}")
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, self.ring(getattr(self, name)))

    @classmethod
    def of(cls, ring: Ring, a, b, c, convention: str = "phi") -> "BinaryForm":
        return cls(ring, ring(a), ring(b), ring(c), convention)

    @property
    def coeffs(self) -> tuple[Elem, Elem, Elem]:
        return (self.a, self.b, self.c)

    def to_phi(self) -> "BinaryForm":
        if self.convention == "phi":
            return self
        return BinaryForm(self.ring, self.a, self.b, self.c, "phi")

    def scale(self, lam) -> "BinaryForm":
        lam = self.ring(lam)
        return BinaryForm(self.ring, lam * self.a, lam * self.b, lam * self.c, self.convention)

    def gram(self) -> mx.Matrix:
        """Matrix of the bilinear form (v, w) ↦ ½ψ(vw)."""
        return mx.mat_scale(self.ring(1).half(), ((self.a, self.b), (self.b, self.c)))

    def discriminant(self) -> Elem:
        """b² - ac, the square class of T in the presentation R[T]/(T² - (b² - ac))."""
        return self.b * self.b - self.a * self.c

    def psi(self, v: Sequence, w: Sequence) -> Elem:
        """ψ(vw) for vectors v, w."""
        v = mx.vector(self.ring, v)
        w = mx.vector(self.ring, w)
        return self.a * v[0] * w[0] + self.b * (v[0] * w[1] + v[1] * w[0]) + self.c * v[1] * w[1]

    def to_json(self) -> dict:
        from .rings import ring_to_json

        return {
            "ring": ring_to_json(self.ring),
            "a": self.a.to_json(),
            "b": self.b.to_json(),
            "c": self.c.to_json(),
            "convention": self.convention,
        }


def _require_phi(f: BinaryForm) -> None:
    if f.convention != "phi":
        raise PreconditionError("operation expects the 'phi' convention; convert with to_phi()")


@dataclass(frozen=True)
class ModuleAction:
    """A 2×2 matrix M with trace 0 and M² = d·I: the action of α on E."""

    ring: Ring
    M: mx.Matrix
    d: Elem

    def __post_init__(self):
        M = mx.matrix(self.ring, self.M)
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "d", self.ring(self.d))
        if len(M) != 2 or any(len(r) != 2 for r in M):
            raise PreconditionError("action matrix must be 2×2")
        if not mx.trace(M).is_zero():
            raise PreconditionError("action matrix must have trace 0")
        if mx.mat_mul(M, M) != mx.mat_scale(self.d, mx.identity(self.ring)):
            raise PreconditionError("action matrix must satisfy M² = d·I")

    @classmethod
    def from_matrix(cls, ring: Ring, M) -> "ModuleAction":
        """Build from a trace-zero matrix, taking d = -det(M)."""
        M = mx.matrix(ring, M)
        return cls(ring, M, -mx.det2(M))

    def apply(self, v: Sequence) -> mx.Vector:
        return mx.mat_vec(self.M, mx.vector(self.ring, v))

    def algebra(self) -> QuadraticAlgebra:
        return QuadraticAlgebra(self.ring, self.d)

    def to_json(self) -> dict:
        from .rings import ring_to_json

        return {"ring": ring_to_json(self.ring), "M": mx.to_json(self.M), "d": self.d.to_json()}


# evaluation and polarization --------------------------------------------------------


def eval_quadratic(f: BinaryForm, v: Sequence) -> Elem:
    """q(x, y) = ½(ax² + 2bxy + cy²)."""
    _require_phi(f)
    return f.psi(v, v).half()


def polarize(q: Callable[[mx.Vector], Elem], v: Sequence, w: Sequence, ring: Ring) -> Elem:
    """φ(vw) = q(v + w) - q(v) - q(w)."""
    v = mx.vector(ring, v)
    w = mx.vector(ring, w)
    return q(tuple(x + y for x, y in zip(v, w))) - q(v) - q(w)


def linear_form(q: Callable[[mx.Vector], Elem], ring: Ring) -> BinaryForm:
    """Recover (a, b, c) from a quadratic map by polarization."""
    e1, e2 = mx.vector(ring, (1, 0)), mx.vector(ring, (0, 1))
    return BinaryForm(ring, polarize(q, e1, e1, ring), polarize(q, e1, e2, ring), polarize(q, e2, e2, ring))


def quadratic_map(f: BinaryForm) -> Callable[[mx.Vector], Elem]:
    return lambda v: eval_quadratic(f, v)


# primitivity --------------------------------------------------------------------------


def is_primitive(f: BinaryForm, witness: Optional[Sequence] = None) -> Tri:
    """Whether the ideal (a, b, c) is the unit ideal (True/False/None)."""
    R = f.ring
    coeffs = f.coeffs
    if witness is not None:
        u, v, w = (R(z) for z in witness)
        if u * f.a + v * f.b + w * f.c == R(1):
            return True
    if all(c.is_zero() for c in coeffs):
        return False
    if R.is_field:
        return True
    if isinstance(R, ModularRing):
        return math.gcd(math.gcd(f.a.v, f.b.v), math.gcd(f.c.v, R.m)) == 1
    if or3(*(c.is_unit() for c in coeffs)) is True:
        return True
    if isinstance(R, PolynomialRing):
        # all three lie in (variables) + (constant terms): proper if the constants are
        consts = [Elem(R.base, R.constant_term(c.v)) for c in coeffs]
        const_form = is_primitive(BinaryForm(R.base, *consts))
        if const_form is False:
            return False
    return None


# the cover attached to a form ----------------------------------------------------------


def alpha_matrix(f: BinaryForm) -> ModuleAction:
    """M = ½[[-b, -c], [a, b]] with d = ¼(b² - ac)."""
    _require_phi(f)
    R = f.ring
    a, b, c = f.coeffs
    M = ((-b.half(), -c.half()), (a.half(), b.half()))
    d = f.discriminant().half().half()
    act = ModuleAction(R, M, d)
    # x ∧ M y = ½ψ(xy) on the four basis pairs
    basis = (mx.vector(R, (1, 0)), mx.vector(R, (0, 1)))
    for x in basis:
        for y in basis:
            if mx.wedge(x, act.apply(y)) != f.psi(x, y).half():
                raise VerificationError("x∧αy = ½ψ(xy) fails")
    return act


@dataclass(frozen=True)
class Covering:
    form: BinaryForm
    algebra: QuadraticAlgebra
    action: ModuleAction

    @property
    def discriminant(self) -> Elem:
        return self.form.discriminant()

    def presentation(self) -> str:
        """R[T]/(T² - (b² - ac)) with T = 2α."""
        return _t_poly(self.form.ring, self.discriminant)

    def t_to_alpha(self):
        """Image of T under the isomorphism to R ⊕ Rα."""
        return self.algebra(0, 2)

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra.to_json(),
            "d": self.algebra.d.to_json(),
            "presentation": self.presentation(),
            "T_relation": self.discriminant.to_json(),
            "action": mx.to_json(self.action.M),
        }


def covering_from_form(f: BinaryForm) -> Covering:
    _require_phi(f)
    act = alpha_matrix(f)
    A = QuadraticAlgebra(f.ring, act.d)
    cov = Covering(f, A, act)
    T = cov.t_to_alpha()
    # T ↦ 2α respects the relation T² = b² - ac; both sides are free on {1, T} resp. {1, α}
    if T * T != A(cov.discriminant, 0):
        raise VerificationError("T = 2α does not satisfy T² = b² - ac")
    if A.d != -mx.det2(act.M):
        raise VerificationError("d != -det(M)")
    return cov


class Generator(NamedTuple):
    vector: mx.Vector
    value: Elem  # ψ(x·x)
    det: Elem  # det[x | Mx] = ½ψ(x·x)


def invertible_generator(f: BinaryForm, act: Optional[ModuleAction] = None) -> Optional[Generator]:
    """A vector x with {x, αx} an R-basis of E, found among e1, e2, e1 + e2.

    Returns None when no candidate value is decidably a unit.
    """
    _require_phi(f)
    prim = is_primitive(f)
    if prim is False:
        raise PreconditionError("form is not primitive")
    if act is None:
        act = alpha_matrix(f)
    R = f.ring
    for cand in ((1, 0), (0, 1), (1, 1)):
        x = mx.vector(R, cand)
        val = f.psi(x, x)
        if val.is_unit() is True:
            det = mx.det2(tuple(zip(x, act.apply(x))))
            if det != val.half() or det.is_unit() is not True:
                raise VerificationError("det[x | αx] is not ½ψ(x·x)")
            return Generator(x, val, det)
    return None


def is_etale(f: BinaryForm) -> Tri:
    """The cover is étale iff b² - ac is a unit."""
    return f.discriminant().is_unit()
