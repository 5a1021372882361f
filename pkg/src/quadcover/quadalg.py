"""Quadratic algebras A = R ⊕ Rα with α² = d.

The rank-one summand N is trivialized by the basis α, so an algebra is the
single scalar ``d`` (the value of the multiplication N⊗N → R on α⊗α).  An
element a + xα is stored as the pair (a, x).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .errors import NotInvertible, PreconditionError, QuadCoverError, RingMismatch, Undecided, VerificationError
from .rings import Elem, ModularRing, PolynomialRing, QuotientRing, Ring
from .rings.base import Tri

#: exhaustive square-root search is only attempted below this modulus
MAX_SQRT_SEARCH = 10**6


class NotASectionWitness(QuadCoverError):
    code = "not_a_section"


@dataclass(frozen=True)
class QuadraticAlgebra:
    ring: Ring
    d: Elem

    def __post_init__(self):
        if not isinstance(self.d, Elem) or self.d.ring != self.ring:
            object.__setattr__(self, "d", self.ring(self.d))

    def __call__(self, a=0, x=0) -> "AlgebraElement":
        return AlgebraElement(self, self.ring(a), self.ring(x))

    @property
    def alpha(self) -> "AlgebraElement":
        return self(0, 1)

    def one(self) -> "AlgebraElement":
        return self(1, 0)

    def presentation(self) -> str:
        """The algebra as R[T]/(T^2 - d)."""
        return _t_poly(self.ring, self.d)

    def to_json(self) -> dict:
        from .rings import ring_to_json

        return {"ring": ring_to_json(self.ring), "d": self.d.to_json()}


@dataclass(frozen=True)
class AlgebraElement:
    """a + x·α."""

    algebra: QuadraticAlgebra = field(repr=False)
    a: Elem
    x: Elem

    def _other(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            if other.algebra != self.algebra:
                raise RingMismatch("elements of different quadratic algebras")
            return other
        return self.algebra(other, 0)

    def __add__(self, other):
        o = self._other(other)
        return AlgebraElement(self.algebra, self.a + o.a, self.x + o.x)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return AlgebraElement(self.algebra, self.a - o.a, self.x - o.x)

    def __neg__(self):
        return AlgebraElement(self.algebra, -self.a, -self.x)

    def __mul__(self, other):
        return alg_mul(self.algebra, self, self._other(other))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = self.algebra.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.algebra == other.algebra and self.a == other.a and self.x == other.x
        try:
            o = self._other(other)
        except (TypeError, RingMismatch):
            return False
        return self.a == o.a and self.x == o.x

    def __hash__(self):
        return hash((self.algebra, self.a, self.x))

    def __str__(self):
        return f"({self.a}) + ({self.x})*alpha"

    def to_json(self) -> dict:
        return {"a": self.a.to_json(), "x": self.x.to_json()}


def _t_poly(ring: Ring, c: Elem, var: str = "T") -> str:
    """Render T^2 - c as a string."""
    cs = str(-c)
    if c.is_zero():
        return f"{var}^2"
    if cs.startswith("-"):
        return f"{var}^2{cs}" if _atomic(cs[1:]) else f"{var}^2-({str(c)})"
    return f"{var}^2+{cs}" if _atomic(cs) else f"{var}^2+({cs})"


def _atomic(s: str) -> bool:
    return "+" not in s and "-" not in s


def _check(A: QuadraticAlgebra, *elems: AlgebraElement) -> None:
    for u in elems:
        if u.algebra != A:
            raise RingMismatch("element does not belong to this algebra")


# multiplication, trace, norm ------------------------------------------------------


def alg_mul(A: QuadraticAlgebra, u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    """(a + xα)(b + yα) = (ab + xy·d) + (ay + bx)α."""
    _check(A, u, v)
    return AlgebraElement(A, u.a * v.a + u.x * v.x * A.d, u.a * v.x + v.a * u.x)


class CharData(NamedTuple):
    trace: Elem
    norm: Elem
    conj: AlgebraElement


def char_data(A: QuadraticAlgebra, u: AlgebraElement) -> CharData:
    """Trace 2a, norm a² - x²d and conjugate a - xα of u = a + xα."""
    _check(A, u)
    return CharData(2 * u.a, u.a * u.a - u.x * u.x * A.d, AlgebraElement(A, u.a, -u.x))


def mu(A: QuadraticAlgebra, x: Elem, y: Elem) -> Elem:
    """The multiplication N⊗N → R on xα ⊗ yα."""
    return x * y * A.d


# branch locus and differentials ---------------------------------------------------


class Diramation(NamedTuple):
    generator: Elem
    etale: Tri


def diramation(A: QuadraticAlgebra) -> Diramation:
    """The image ideal of N⊗N → R is (d); the cover is étale exactly when d is a unit."""
    return Diramation(A.d, A.d.is_unit())


@dataclass(frozen=True)
class KahlerPresentation:
    """Ω¹ of R[T]/(T²-d) over R as an R-module.

    Generators are dT and T·dT; ``relations`` are the coordinate rows of the
    R-span of A·(2T dT), i.e. of 2T·dT and T·2T·dT.
    """

    algebra: QuadraticAlgebra
    generators: tuple[str, str]
    relations: tuple[tuple[Elem, Elem], ...]

    def combination(self, coeffs) -> tuple[Elem, Elem]:
        out = [self.algebra.ring(0), self.algebra.ring(0)]
        for c, row in zip(coeffs, self.relations):
            out = [o + c * r for o, r in zip(out, row)]
        return tuple(out)


def kahler_differentials(A: QuadraticAlgebra) -> KahlerPresentation:
    two_t = A(0, 2)  # derivative of T² - d, times dT
    rows = []
    for basis in (A.one(), A.alpha):
        r = alg_mul(A, two_t, basis)
        rows.append((r.a, r.x))  # coordinates on (dT, T·dT)
    return KahlerPresentation(A, ("dT", "T*dT"), tuple(rows))


def differentials_annihilator(A: QuadraticAlgebra) -> Elem:
    """Generator of Ann_R(Ω¹_{A/R}); equals d.

    The relation matrix has one nonzero entry per row.  A row whose entry is
    a unit kills its generator; the surviving cyclic summand R/(r) has
    annihilator (r), reported with the unit factor 2 removed.
    """
    pres = kahler_differentials(A)
    R = A.ring
    killed = set()
    entries: dict[int, list[Elem]] = {0: [], 1: []}
    for row in pres.relations:
        nz = [j for j, e in enumerate(row) if not e.is_zero()]
        if len(nz) > 1:
            raise VerificationError("relation matrix is not monomial")
        if not nz:
            continue
        j = nz[0]
        entries[j].append(row[j])
        if row[j].is_unit() is True:
            killed.add(j)
    surviving = [j for j in (0, 1) if j not in killed]
    if not surviving:
        return R(1)
    if len(surviving) != 1 or len(entries[surviving[0]]) > 1:
        raise VerificationError("unexpected shape of the presentation")
    gen = entries[surviving[0]][0].half() if entries[surviving[0]] else R(0)
    # d·Ω¹ = 0: d·dT = ½·(2d·dT) and d·(T dT) = (d/2)·(2T·dT)
    half_d = gen.half()
    lhs = [(gen, R(0)), (R(0), gen)]
    coeffs = [(R(0), R(1).half()), (half_d, R(0))]
    for target, c in zip(lhs, coeffs):
        if pres.combination(c) != target:
            raise VerificationError("annihilator does not kill the presentation")
    return gen


# standard covers and sections ----------------------------------------------------


@dataclass(frozen=True)
class StandardCover:
    u: Elem
    algebra: QuadraticAlgebra

    def embed(self, el: AlgebraElement) -> tuple[Elem, Elem]:
        """a + xα ↦ (a - xu, a + xu) in R × R."""
        _check(self.algebra, el)
        return (el.a - el.x * self.u, el.a + el.x * self.u)

    def preimage(self, p: Elem, q: Elem) -> AlgebraElement:
        """Inverse of :meth:`embed` on its image; needs u to be a unit."""
        t = (p + q).half()
        xu = (q - p).half()
        return self.algebra(t, xu / self.u)


def standard_cover(u: Elem) -> StandardCover:
    return StandardCover(u, QuadraticAlgebra(u.ring, u * u))


@dataclass(frozen=True)
class Section:
    """The ring map A → R, a + xα ↦ a + xw, for a witness w with w² = d."""

    algebra: QuadraticAlgebra
    w: Elem

    def __call__(self, el: AlgebraElement) -> Elem:
        _check(self.algebra, el)
        return el.a + el.x * self.w

    def standard_cover(self) -> StandardCover:
        return StandardCover(self.w, self.algebra)


def section_witness_check(A: QuadraticAlgebra, w) -> Section:
    w = A.ring(w)
    if w * w != A.d:
        raise NotASectionWitness(f"{w}^2 != {A.d}")
    return Section(A, w)


def find_section(A: QuadraticAlgebra) -> Optional[Section]:
    """Exhaustive witness search over Z/m (m ≤ 10^6); None when no square root exists.

    Raises :class:`Undecided` for rings where squareness is not searchable.
    """
    R = A.ring
    if isinstance(R, ModularRing) and R.m <= MAX_SQRT_SEARCH:
        target = A.d.v
        for w in range(R.m):
            if w * w % R.m == target:
                return Section(A, R(w))
        return None
    raise Undecided(f"no square-root search over {R.describe()}")


# pinching --------------------------------------------------------------------------


@dataclass(frozen=True)
class Pinch:
    """The subalgebra R ⊕ tN' of A', with basis tα'."""

    source: QuadraticAlgebra
    t: Elem
    algebra: QuadraticAlgebra
    regularity_checked: bool

    def include(self, el: AlgebraElement) -> AlgebraElement:
        """a + x(tα') ↦ a + (xt)α'."""
        _check(self.algebra, el)
        return self.source(el.a, el.x * self.t)


def pinch(Aprime: QuadraticAlgebra, t) -> Pinch:
    t = Aprime.ring(t)
    regular = t.is_regular()
    if regular is False:
        raise PreconditionError(f"{t} is a zero divisor in {Aprime.ring.describe()}")
    if regular is None:
        warnings.warn(f"regularity of {t} is not decidable in {Aprime.ring.describe()}; trusted", stacklevel=2)
    result = Pinch(Aprime, t, QuadraticAlgebra(Aprime.ring, t * t * Aprime.d), regular is True)
    A = result.algebra
    # a linear map of rank-two algebras preserving 1 is multiplicative iff it respects α·α
    if result.include(A.alpha * A.alpha) != result.include(A.alpha) * result.include(A.alpha):
        raise VerificationError("inclusion of the pinched algebra is not multiplicative")
    return result


# splitting base change ---------------------------------------------------------------


@dataclass(frozen=True)
class SplitBaseChange:
    ring: QuotientRing
    source: QuadraticAlgebra
    target: QuadraticAlgebra
    t: Elem

    @property
    def U(self) -> Elem:
        return self.ring.gen(self.ring.var)

    def forward(self, el: AlgebraElement) -> AlgebraElement:
        """α₁ ↦ U·α₂."""
        return self.target(el.a, el.x * self.U)

    def backward(self, el: AlgebraElement) -> AlgebraElement:
        """α₂ ↦ U t⁻¹·α₁."""
        return self.source(el.a, el.x * self.U * self.ring(self.t).inv())


def _fresh_name(ring: Ring, stem: str = "U") -> str:
    taken = set(ring.variable_names())
    name, k = stem, 0
    while name in taken:
        k += 1
        name = f"{stem}{k}"
    return name


def splitting_base_change(A1: QuadraticAlgebra, A2: QuadraticAlgebra, t) -> SplitBaseChange:
    """Over R' = R[U]/(U² - t) the algebras d₁ = t·d₂ become isomorphic via α₁ ↦ Uα₂."""
    if A1.ring != A2.ring:
        raise RingMismatch("both algebras must live over the same ring")
    R = A1.ring
    t = R(t)
    unit = t.is_unit()
    if unit is False:
        raise NotInvertible(f"{t} is not a unit")
    if unit is None:
        raise Undecided(f"cannot decide whether {t} is a unit")
    if t * A2.d != A1.d:
        raise PreconditionError(f"t·d2 = {t * A2.d} differs from d1 = {A1.d}")
    var = _fresh_name(R)
    P = PolynomialRing(R, (var,))
    U = P.gen(var)
    Rp = QuotientRing.of(P, U * U - t)
    out = SplitBaseChange(Rp, QuadraticAlgebra(Rp, Rp(A1.d)), QuadraticAlgebra(Rp, Rp(A2.d)), t)
    a1, a2 = out.source.alpha, out.target.alpha
    if out.forward(a1) * out.forward(a1) != out.forward(a1 * a1):
        raise VerificationError("α₁ ↦ Uα₂ is not multiplicative")
    if out.backward(out.forward(a1)) != a1 or out.forward(out.backward(a2)) != a2:
        raise VerificationError("base change maps are not mutually inverse")
    return out
