"""Seeded random inputs and the identity suite behind ``verify-identities``."""

from __future__ import annotations

import random
from math import gcd
from fractions import Fraction
from typing import Callable, NamedTuple

from . import matrix as mx
from .binforms import BinaryForm, alpha_matrix, covering_from_form, eval_quadratic, linear_form, quadratic_map
from .normfunctor import FormMorphism, norm_value, roundtrip_action, roundtrip_form, skew_symmetry_check, transfer_morphism
from .polyduality import QuadraticPolynomial, alpha_from_polynomial, dual_form, duality_matrix, kernel_generator, proj_spec_check
from .quadalg import (
    QuadraticAlgebra,
    char_data,
    diramation,
    differentials_annihilator,
    find_section,
    pinch,
    standard_cover,
)
from .rings import QQ, Elem, ModularRing, PolynomialRing, QuotientRing, Ring, elem_symmetric, s_ring, substitute, symmetric_reduce, t_ring
from .symcover import act, alt_decompose, generic_discriminant, p1p1_identity_check, sign, vandermonde


def random_elem(ring: Ring, rng: random.Random, size: int = 9) -> Elem:
    if ring.kind == "rational":
        return ring(Fraction(rng.randint(-size, size), rng.randint(1, 5)))
    if ring.kind == "modular":
        return ring(rng.randrange(ring.m))
    if isinstance(ring, PolynomialRing):
        terms = []
        for _ in range(rng.randint(0, 3)):
            e = [rng.randint(0, 2) for _ in ring.variables]
            terms.append((e, random_elem(ring.base, rng, size).v))
        return Elem(ring, ring.from_terms(terms))
    if isinstance(ring, QuotientRing):
        return ring(random_elem(ring.base, rng, size))
    raise TypeError(f"no random generator for {ring.describe()}")


def random_form(ring: Ring, rng: random.Random) -> BinaryForm:
    return BinaryForm(ring, *(random_elem(ring, rng) for _ in range(3)))


def random_symmetric(n: int, rng: random.Random, max_degree: int = 6, base: Ring = QQ) -> Elem:
    """A random element of K[S1..Sn] of weighted degree ≤ max_degree (Sk has weight k)."""
    S = s_ring(n, base)
    terms = []
    for _ in range(rng.randint(1, 4)):
        budget, e = max_degree, []
        for k in range(1, n + 1):
            p = rng.randint(0, budget // k)
            e.append(p)
            budget -= p * k
        terms.append((e, random_elem(base, rng).v))
    return Elem(S, S.from_terms(terms))


def expand_symmetric(Q: Elem, n: int) -> Elem:
    base = Q.ring.base
    e = {f"S{k}": elem_symmetric(n, k, base) for k in range(1, n + 1)}
    return substitute(Q, e, t_ring(n, base))


def random_theta(ring: Ring, rng: random.Random) -> mx.Matrix:
    while True:
        th = tuple(tuple(random_elem(ring, rng) for _ in range(2)) for _ in range(2))
        if mx.det2(th).is_regular() is True:
            return th


class IdentityResult(NamedTuple):
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "pass": self.passed, "detail": self.detail}


def _all(it) -> bool:
    return all(it)


def _generic_abc_xy() -> tuple[PolynomialRing, tuple[Elem, ...]]:
    R = PolynomialRing(QQ, ("a", "b", "c", "x", "y"))
    return R, R.gens()


def _checks(rng: random.Random) -> list[tuple[str, Callable[[], bool]]]:
    F97, F11, F13 = ModularRing(97), ModularRing(11), ModularRing(13)
    forms = [random_form(F97, rng) for _ in range(50)] + [random_form(QQ, rng) for _ in range(50)]

    def half_law():
        rings = [QQ, ModularRing(15), PolynomialRing(ModularRing(9), ("s",))]
        return _all(2 * x.half() == x and (2 * x).half() == x for R in rings for x in (random_elem(R, rng) for _ in range(30)))

    def reduce_is_ring_map():
        n = 3
        pairs = [(expand_symmetric(random_symmetric(n, rng, 4), n), expand_symmetric(random_symmetric(n, rng, 4), n)) for _ in range(5)]
        return _all(
            symmetric_reduce(P * Q) == symmetric_reduce(P) * symmetric_reduce(Q)
            and symmetric_reduce(P + Q) == symmetric_reduce(P) + symmetric_reduce(Q)
            for P, Q in pairs
        )

    def algebra_laws():
        A = QuadraticAlgebra(QQ, random_elem(QQ, rng))
        els = [A(random_elem(QQ, rng), random_elem(QQ, rng)) for _ in range(10)]
        ok = True
        for u in els:
            tr, nm, cj = char_data(A, u)
            ok &= u * cj == A(nm, 0) and u + cj == A(tr, 0)
            pure = A(0, u.x)
            ok &= pure * pure == A(-char_data(A, pure).norm, 0)
            for v in els[:3]:
                ok &= u * v == v * u and (u * v) * els[0] == u * (v * els[0])
        return ok

    def standard_embedding():
        sc = standard_cover(random_elem(QQ, rng))
        A = sc.algebra
        ok = True
        for _ in range(20):
            u, v = A(random_elem(QQ, rng), random_elem(QQ, rng)), A(random_elem(QQ, rng), random_elem(QQ, rng))
            pu, pv, puv = sc.embed(u), sc.embed(v), sc.embed(u * v)
            ok &= puv == (pu[0] * pv[0], pu[1] * pv[1]) and sc.embed(u + v) == (pu[0] + pv[0], pu[1] + pv[1])
            ok &= char_data(A, u).trace == pu[0] + pu[1]
        return ok

    def section_iff_square():
        ok = True
        for p in (3, 5, 7, 11, 13):
            R = ModularRing(p)
            squares = {w * w % p for w in range(p)}
            for d in range(p):
                ok &= (find_section(QuadraticAlgebra(R, d)) is not None) == (d in squares)
        return ok

    def differentials_vs_diramation():
        # same ideal in Z/15: equal gcd with the modulus
        R = ModularRing(15)
        return _all(
            gcd(differentials_annihilator(QuadraticAlgebra(R, d)).v, 15) == gcd(diramation(QuadraticAlgebra(R, d)).generator.v, 15)
            for d in range(15)
        )

    def pinch_composes():
        A = QuadraticAlgebra(QQ, random_elem(QQ, rng))
        t, s = QQ(rng.randint(1, 9)), QQ(-rng.randint(1, 9))
        return pinch(pinch(A, t).algebra, s).algebra == pinch(A, t * s).algebra

    def det_law():
        return _all(covering_from_form(f).algebra.d == -mx.det2(alpha_matrix(f).M) for f in forms)

    def wedge_relation():
        ok = True
        for f in forms:
            act_ = alpha_matrix(f)
            for x in ((1, 0), (0, 1)):
                for y in ((1, 0), (0, 1)):
                    ok &= mx.wedge(mx.vector(f.ring, x), act_.apply(y)) == f.psi(x, y).half()
        return ok

    def polarization():
        return _all(linear_form(quadratic_map(f), f.ring).coeffs == f.coeffs for f in forms)

    def nu_eq_q_generic():
        R, (a, b, c, x, y) = _generic_abc_xy()
        f = BinaryForm(R, a, b, c)
        return norm_value(alpha_matrix(f), (x, y)) == eval_quadratic(f, (x, y))

    def roundtrips():
        return _all(roundtrip_form(f).ok and roundtrip_action(alpha_matrix(f)) for f in forms)

    def skew_generic():
        R = PolynomialRing(QQ, ("p", "q", "r", "v1", "v2", "w1", "w2"))
        p, q, r, v1, v2, w1, w2 = R.gens()
        return skew_symmetry_check(((p, q), (r, -p)), (v1, v2), (w1, w2), R)

    def skew_modular():
        ok = True
        for _ in range(100):
            p, q, r = (random_elem(F11, rng) for _ in range(3))
            v = (random_elem(F11, rng), random_elem(F11, rng))
            w = (random_elem(F11, rng), random_elem(F11, rng))
            ok &= skew_symmetry_check(((p, q), (r, -p)), v, w, F11)
        return ok

    def transfer():
        ok = True
        for _ in range(30):
            target = random_form(F97, rng)
            m = FormMorphism.pull(target, random_theta(F97, rng))
            _, checks = transfer_morphism(m)
            ok &= checks.ok
        return ok

    def transfer_composes():
        target = random_form(QQ, rng)
        m2 = FormMorphism.pull(target, random_theta(QQ, rng))
        m1 = FormMorphism.pull(m2.source, random_theta(QQ, rng))
        return transfer_morphism(m1.then(m2))[0] == transfer_morphism(m1)[0] * transfer_morphism(m2)[0]

    def duality():
        D = duality_matrix(QQ)
        return D == mx.matrix(QQ, ((0, 0, 2), (0, -1, 0), (2, 0, 0))) and mx.det3(D) == 4 and mx.mat_mul(D, D) == mx.matrix(
            QQ, ((4, 0, 0), (0, 1, 0), (0, 0, 4))
        )

    def route_independence():
        gs = [QuadraticPolynomial(F13, *(random_elem(F13, rng) for _ in range(3))) for _ in range(50)]
        return _all(alpha_from_polynomial(g).M == alpha_matrix(dual_form(g)).M for g in gs)

    def kernel_generic():
        R = PolynomialRing(QQ, ("a", "b", "c"))
        a, b, c = R.gens()
        return kernel_generator(QuadraticPolynomial(R, a, b, c)) == (-a, -b, -c)

    def proj_spec():
        ok = True
        for p in (3, 5, 7):
            R = ModularRing(p)
            for a in range(p):
                for b in range(p):
                    for c in range(p):
                        if a or b or c:
                            ok &= proj_spec_check(QuadraticPolynomial.of(R, a, b, c, "gamma2b")).ok
        return ok

    def discriminants():
        S = s_ring(2)
        S1, S2 = S.gens()
        return generic_discriminant(2) == S1 * S1 - 4 * S2

    def vandermonde_sign():
        from itertools import permutations

        ok = True
        for n in (2, 3, 4):
            V = vandermonde(n)
            for perm in permutations(range(n)):
                ok &= act(V, perm) == sign(perm) * V
        return ok

    def basis_1_v():
        ok = True
        for _ in range(5):
            n = rng.choice((2, 3))
            A, B = random_symmetric(n, rng, 4), random_symmetric(n, rng, 4)
            dec = alt_decompose(expand_symmetric(A, n) + vandermonde(n) * expand_symmetric(B, n))
            ok &= dec.symmetric_part == A and dec.vandermonde_cofactor == B
        return ok

    return [
        ("rings.half", half_law),
        ("rings.reduce_ring_map", reduce_is_ring_map),
        ("quadalg.algebra_laws", algebra_laws),
        ("quadalg.standard_embedding", standard_embedding),
        ("quadalg.section_iff_square", section_iff_square),
        ("quadalg.differentials_eq_diramation", differentials_vs_diramation),
        ("quadalg.pinch_composes", pinch_composes),
        ("binforms.det_law", det_law),
        ("binforms.wedge_relation", wedge_relation),
        ("binforms.polarization", polarization),
        ("normfunctor.nu_eq_q", nu_eq_q_generic),
        ("normfunctor.roundtrip", roundtrips),
        ("normfunctor.skew_generic", skew_generic),
        ("normfunctor.skew_modular", skew_modular),
        ("normfunctor.transfer", transfer),
        ("normfunctor.transfer_composes", transfer_composes),
        ("polyduality.duality_matrix", duality),
        ("polyduality.route_independence", route_independence),
        ("polyduality.kernel_generic", kernel_generic),
        ("polyduality.proj_spec", proj_spec),
        ("symcover.discriminant_n2", discriminants),
        ("symcover.vandermonde_sign", vandermonde_sign),
        ("symcover.basis_1_v", basis_1_v),
        ("symcover.p1p1_identity", p1p1_identity_check),
    ]


def verify_identities(seed: int = 0) -> list[IdentityResult]:
    rng = random.Random(seed)
    out = []
    for name, check in _checks(rng):
        try:
            out.append(IdentityResult(name, bool(check())))
        except Exception as exc:  # a crash is a failed identity, reported not raised
            out.append(IdentityResult(name, False, f"{type(exc).__name__}: {exc}"))
    return out
