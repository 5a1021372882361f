"""Quadratic polynomials γ ∈ Sym²(E) and the forms dual to them.

Sym²(E) is paired with itself into (Λ²E)^⊗2 by
x1x2 ⊗ x3x4 ↦ (x1∧x3)(x2∧x4) + (x1∧x4)(x2∧x3); the pairing turns a
polynomial γ into a linear form φ on Sym²(E).  Two conventions for the
middle coefficient are in use and carried as an explicit tag:

* ``gamma_b``: γ = a·e1² + b·e1e2 + c·e2²
* ``gamma2b``: γ = a·X² + 2b·XY + c·Y²
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import matrix as mx
from .binforms import BinaryForm, ModuleAction, alpha_matrix, is_primitive
from .errors import PreconditionError, VerificationError
from .quadalg import QuadraticAlgebra, _t_poly
from .rings import Elem, Ring, in_span, rank, ring_to_json

CONVENTIONS = ("gamma_b", "gamma2b")

# Sym² basis e1², e1e2, e2² as index pairs
SYM2_BASIS = ((0, 0), (0, 1), (1, 1))


@dataclass(frozen=True)
class QuadraticPolynomial:
    ring: Ring
    a: Elem
    b: Elem
    c: Elem
    convention: str = "gamma_b"

    def __post_init__(self):
        if self.convention not in CONVENTIONS:
            raise PreconditionError(f"unknown convention {self.convention!r}")
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, self.ring(getattr(self, name)))

    @classmethod
    def of(cls, ring: Ring, a, b, c, convention: str = "gamma_b") -> "QuadraticPolynomial":
        return cls(ring, ring(a), ring(b), ring(c), convention)

    @property
    def coeffs(self) -> tuple[Elem, Elem, Elem]:
        return (self.a, self.b, self.c)

    def to_gamma_b(self) -> "QuadraticPolynomial":
        if self.convention == "gamma_b":
            return self
        return QuadraticPolynomial(self.ring, self.a, 2 * self.b, self.c, "gamma_b")

    def to_gamma2b(self) -> "QuadraticPolynomial":
        if self.convention == "gamma2b":
            return self
        return QuadraticPolynomial(self.ring, self.a, self.b.half(), self.c, "gamma2b")

    def to_json(self) -> dict:
        return {
            "ring": ring_to_json(self.ring),
            "a": self.a.to_json(),
            "b": self.b.to_json(),
            "c": self.c.to_json(),
            "convention": self.convention,
        }


def _wedge_basis(i: int, j: int) -> int:
    """e_i ∧ e_j as a multiple of e1∧e2."""
    if i == j:
        return 0
    return 1 if (i, j) == (0, 1) else -1


def sym2_pairing(p: tuple[int, int], q: tuple[int, int]) -> int:
    """Pairing of basis monomials p = x1x2, q = x3x4."""
    x1, x2 = p
    x3, x4 = q
    return _wedge_basis(x1, x3) * _wedge_basis(x2, x4) + _wedge_basis(x1, x4) * _wedge_basis(x2, x3)


def duality_matrix(ring: Ring) -> mx.Matrix:
    """Matrix of Sym² → Hom(Sym², (Λ²E)^⊗2) on the monomial basis, computed from the pairing."""
    for p in SYM2_BASIS:
        for q in SYM2_BASIS:
            swapped_p = (p[1], p[0])
            swapped_q = (q[1], q[0])
            if not (sym2_pairing(p, q) == sym2_pairing(swapped_p, q) == sym2_pairing(p, swapped_q)):
                raise VerificationError("pairing is not symmetric in each factor")
    return tuple(tuple(ring(sym2_pairing(p, q)) for p in SYM2_BASIS) for q in SYM2_BASIS)


def dual_form(g: QuadraticPolynomial) -> BinaryForm:
    """φ(e_k e_l) = ⟨γ, e_k e_l⟩, giving (2c, -b, 2a) for γ in the gamma_b convention."""
    g = g.to_gamma_b()
    D = duality_matrix(g.ring)
    phi = mx.mat_vec(D, g.coeffs)
    return BinaryForm(g.ring, phi[0], phi[1], phi[2])


def alpha_from_polynomial(g: QuadraticPolynomial) -> ModuleAction:
    """α(e1) = ½b·e1 + c·e2, α(e2) = -a·e1 - ½b·e2 (columns of the matrix)."""
    g = g.to_gamma_b()
    a, b, c = g.coeffs
    M = ((b.half(), -a), (c, -b.half()))
    return ModuleAction.from_matrix(g.ring, M)


def sym2_product(v: mx.Vector, w: mx.Vector) -> tuple[Elem, Elem, Elem]:
    """Coordinates of vw on e1², e1e2, e2²."""
    return (v[0] * w[0], v[0] * w[1] + v[1] * w[0], v[1] * w[1])


def kernel_generator(g: QuadraticPolynomial) -> tuple[Elem, Elem, Elem]:
    """e1·α(e2) - α(e1)·e2 in Sym² coordinates; always -γ."""
    g = g.to_gamma_b()
    R = g.ring
    act = alpha_from_polynomial(g)
    e1, e2 = mx.vector(R, (1, 0)), mx.vector(R, (0, 1))
    left = sym2_product(e1, act.apply(e2))
    right = sym2_product(act.apply(e1), e2)
    out = tuple(x - y for x, y in zip(left, right))
    if out != tuple(-x for x in g.coeffs):
        raise VerificationError("kernel generator differs from -γ")
    return out


# Proj ≅ Spec ---------------------------------------------------------------------------


def _tensor(v: mx.Vector, w: mx.Vector) -> list[Elem]:
    """v⊗w on the basis e1⊗e1, e1⊗e2, e2⊗e1, e2⊗e2."""
    return [v[i] * w[j] for i in range(2) for j in range(2)]


@dataclass(frozen=True)
class ProjSpecReport:
    polynomial: QuadraticPolynomial
    algebra: QuadraticAlgebra
    action: ModuleAction
    generator: Optional[mx.Vector]
    generator_value: Optional[Elem]
    relation_in_span: bool
    relation_rank: int

    @property
    def ok(self) -> bool:
        return self.generator is not None and self.relation_in_span

    def presentation(self) -> str:
        return _t_poly(self.algebra.ring, self.algebra.d)

    def to_json(self) -> dict:
        return {
            "algebra": {**self.algebra.to_json(), "presentation": self.presentation()},
            "action": mx.to_json(self.action.M),
            "generator": None if self.generator is None else [x.to_json() for x in self.generator],
            "generator_value": None if self.generator_value is None else self.generator_value.to_json(),
            "relation_in_span": self.relation_in_span,
            "relation_rank": self.relation_rank,
            "pass": self.ok,
        }


#: order in which candidate generators z = (x, y) are tried
GENERATOR_CANDIDATES = ((1, 0), (0, 1), (1, 1))


def proj_spec_check(g: QuadraticPolynomial) -> ProjSpecReport:
    """Check Proj(R[X,Y]/(γ)) ≅ Spec(R[T]/(T² - (b² - ac))) for γ = aX² + 2bXY + cY².

    Needs a field of coefficients (QQ or Z/p) and a primitive γ.
    """
    g = g.to_gamma2b()
    R = g.ring
    if not R.is_field:
        raise PreconditionError(f"{R.describe()} is not a field")
    a, b, c = g.coeffs
    if is_primitive(BinaryForm(R, a, b, c)) is not True:
        raise PreconditionError("γ is not primitive")
    act = alpha_from_polynomial(g)
    expected = mx.matrix(R, ((b, -a), (c, -b)))
    if act.M != expected:
        raise VerificationError("action matrix differs from [[b, -a], [c, -b]]")
    if act.d != b * b - a * c:
        raise VerificationError("α² differs from b² - ac")
    if alpha_matrix(dual_form(g)).M != act.M:
        raise VerificationError("the two routes to the action disagree")
    algebra = QuadraticAlgebra(R, act.d)

    gen = gen_value = None
    for cand in GENERATOR_CANDIDATES:
        z = mx.vector(R, cand)
        x, y = z
        value = c * x * x - 2 * b * x * y + a * y * y
        det = mx.det2(tuple(zip(z, act.apply(z))))
        if det != value:
            raise VerificationError("det[z | αz] differs from G(z)")
        if value.is_unit() is True:
            gen, gen_value = z, value
            break
    if gen is None:
        raise VerificationError("no unit generator among the candidates for a primitive γ over a field")

    # E ⊗_A E = E ⊗_R E modulo (αv)⊗w - v⊗(αw)
    basis = (mx.vector(R, (1, 0)), mx.vector(R, (0, 1)))
    relations = []
    for v in basis:
        for w in basis:
            relations.append([p - q for p, q in zip(_tensor(act.apply(v), w), _tensor(v, act.apply(w)))])
    target = [a, 2 * b, R(0), c]
    return ProjSpecReport(
        polynomial=g,
        algebra=algebra,
        action=act,
        generator=gen,
        generator_value=gen_value,
        relation_in_span=in_span(relations, target, R),
        relation_rank=rank(relations, R),
    )
