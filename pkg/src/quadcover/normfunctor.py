"""From an invertible module over a double cover back to a quadratic form.

With bases fixed (α of N, e1∧e2 of Λ²E) the norm form of the pair
(A, E) is v ↦ coefficient of v∧αv, and the natural isomorphisms between
the two constructions become exact matrix equalities, which is what
:func:`roundtrip_form` checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from . import matrix as mx
from .binforms import BinaryForm, ModuleAction, alpha_matrix, covering_from_form, eval_quadratic
from .errors import PreconditionError, RingMismatch, Undecided
from .quadalg import QuadraticAlgebra
from .rings import Elem, Ring


@dataclass(frozen=True)
class CoverModulePair:
    algebra: QuadraticAlgebra
    action: ModuleAction

    def __post_init__(self):
        if self.algebra.ring != self.action.ring:
            raise RingMismatch("algebra and action over different rings")
        if self.algebra.d != self.action.d:
            raise PreconditionError("the action does not satisfy α² = d")

    @classmethod
    def from_action(cls, act: ModuleAction) -> "CoverModulePair":
        return cls(act.algebra(), act)

    @property
    def ring(self) -> Ring:
        return self.algebra.ring


def _pair(p) -> CoverModulePair:
    return p if isinstance(p, CoverModulePair) else CoverModulePair.from_action(p)


def norm_value(p, v: Sequence) -> Elem:
    """Coefficient of v∧αv on e1∧e2: m21·x² + (m22 - m11)·xy - m12·y²."""
    p = _pair(p)
    v = mx.vector(p.ring, v)
    return mx.wedge(v, p.action.apply(v))


def norm_form(p) -> BinaryForm:
    """φ(xy) = 2·(x∧αy), read on the basis of Sym²."""
    p = _pair(p)
    R = p.ring
    e1, e2 = mx.vector(R, (1, 0)), mx.vector(R, (0, 1))
    act = p.action
    return BinaryForm(
        R,
        2 * mx.wedge(e1, act.apply(e1)),
        2 * mx.wedge(e1, act.apply(e2)),
        2 * mx.wedge(e2, act.apply(e2)),
    )


class RoundTripReport(NamedTuple):
    ok: bool
    mismatch: Optional[str]

    def to_json(self) -> dict:
        return {"pass": self.ok, "mismatch": self.mismatch}


def roundtrip_form(f: BinaryForm) -> RoundTripReport:
    """Form → cover → norm form, and action → norm form → action."""
    cov = covering_from_form(f.to_phi())
    back = norm_form(CoverModulePair(cov.algebra, cov.action))
    for name, x, y in zip("abc", f.coeffs, back.coeffs):
        if x != y:
            return RoundTripReport(False, f"{name}: {x} != {y}")
    rebuilt = alpha_matrix(back)
    diff = mx.first_difference(cov.action.M, rebuilt.M)
    if diff is not None:
        i, j, x, y = diff
        return RoundTripReport(False, f"M[{i}][{j}]: {x} != {y}")
    # x ∧ u(α'⊗y) = ½φ(xy) = x ∧ αy, on every basis pair
    R = f.ring
    basis = (mx.vector(R, (1, 0)), mx.vector(R, (0, 1)))
    for x in basis:
        for y in basis:
            lhs = mx.wedge(x, rebuilt.apply(y))
            if lhs != back.psi(x, y).half() or lhs != mx.wedge(x, cov.action.apply(y)):
                return RoundTripReport(False, "identification α ↦ α' fails")
    if rebuilt.d != cov.algebra.d:
        return RoundTripReport(False, f"d: {rebuilt.d} != {cov.algebra.d}")
    return RoundTripReport(True, None)


def roundtrip_action(act: ModuleAction) -> bool:
    """norm form followed by the cover construction returns the original matrix."""
    return alpha_matrix(norm_form(act)).M == act.M


# morphisms -------------------------------------------------------------------------------


def pullback(target: BinaryForm, theta) -> BinaryForm:
    """The form q'∘θ, read off θᵀ·Gram(q')·θ."""
    R = target.ring
    theta = mx.matrix(R, theta)
    G = mx.mat_mul(mx.transpose(theta), mx.mat_mul(((target.a, target.b), (target.b, target.c)), theta))
    return BinaryForm(R, G[0][0], G[0][1], G[1][1])


@dataclass(frozen=True)
class FormMorphism:
    """θ: E → E' with q = q'∘θ and det θ regular."""

    theta: mx.Matrix
    source: BinaryForm
    target: BinaryForm

    def __post_init__(self):
        R = self.target.ring
        if self.source.ring != R:
            raise RingMismatch("source and target over different rings")
        object.__setattr__(self, "theta", mx.matrix(R, self.theta))
        if pullback(self.target, self.theta).coeffs != self.source.coeffs:
            raise PreconditionError("q != q'∘θ")
        regular = mx.det2(self.theta).is_regular()
        if regular is False:
            raise PreconditionError("θ is not injective (determinant is a zero divisor)")
        if regular is None:
            raise Undecided("cannot decide whether det θ is regular")

    @classmethod
    def pull(cls, target: BinaryForm, theta) -> "FormMorphism":
        return cls(mx.matrix(target.ring, theta), pullback(target, theta), target)

    def det(self) -> Elem:
        return mx.det2(self.theta)

    def then(self, other: "FormMorphism") -> "FormMorphism":
        """Composite E → E' → E'' (self first)."""
        if other.source.coeffs != self.target.coeffs:
            raise PreconditionError("morphisms are not composable")
        return FormMorphism(mx.mat_mul(other.theta, self.theta), self.source, other.target)


class TransferChecks(NamedTuple):
    action_square: bool
    multiplication: bool
    trace_zero: bool

    @property
    def ok(self) -> bool:
        return self.action_square and self.multiplication and self.trace_zero


def transfer_morphism(m: FormMorphism) -> tuple[Elem, TransferChecks]:
    """ψ on N is multiplication by det θ; checks θM = det θ·M'θ and d = (det θ)²·d'."""
    M = alpha_matrix(m.source.to_phi())
    Mp = alpha_matrix(m.target.to_phi())
    delta = m.det()
    square = mx.mat_mul(m.theta, M.M) == mx.mat_scale(delta, mx.mat_mul(Mp.M, m.theta))
    mult = M.d == delta * delta * Mp.d
    # ψ(α) = δα' has trace zero, so N lands in N'
    trace_zero = mx.trace(mx.mat_scale(delta, Mp.M)).is_zero()
    return delta, TransferChecks(square, mult, trace_zero)


def skew_symmetry_check(M, v: Sequence, w: Sequence, ring: Optional[Ring] = None) -> bool:
    """v∧Mw == w∧Mv for a trace-zero M."""
    if ring is None:
        ring = M[0][0].ring
    M = mx.matrix(ring, M)
    if not mx.trace(M).is_zero():
        raise PreconditionError("matrix must have trace 0")
    v = mx.vector(ring, v)
    w = mx.vector(ring, w)
    return mx.wedge(v, mx.mat_vec(M, w)) == mx.wedge(w, mx.mat_vec(M, v))


def nu_equals_q(f: BinaryForm, v: Sequence) -> bool:
    return norm_value(alpha_matrix(f), v) == eval_quadratic(f, v)
