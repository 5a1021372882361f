import random

import pytest
from hypothesis import given, strategies as st

from quadcover import matrix as mx
from quadcover.binforms import alpha_matrix
from quadcover.errors import PreconditionError
from quadcover.polyduality import (
    QuadraticPolynomial,
    alpha_from_polynomial,
    dual_form,
    duality_matrix,
    kernel_generator,
    proj_spec_check,
)
from quadcover.rings import QQ, ModularRing

F13 = ModularRing(13)
residues = st.integers(0, 12)


def test_duality_matrix_entries():
    D = duality_matrix(QQ)
    assert D == mx.matrix(QQ, ((0, 0, 2), (0, -1, 0), (2, 0, 0)))
    # the anti-diagonal is an odd permutation, so the determinant is +4
    assert mx.det3(D) == QQ(4)
    assert mx.mat_mul(D, D) == mx.matrix(QQ, ((4, 0, 0), (0, 1, 0), (0, 0, 4)))


def test_dual_form_examples():
    assert dual_form(QuadraticPolynomial.of(QQ, 1, 0, 1)).coeffs == (QQ(2), QQ(0), QQ(2))
    assert dual_form(QuadraticPolynomial.of(QQ, 0, 0, 0)).coeffs == (QQ(0),) * 3
    g = QuadraticPolynomial.of(QQ, 1, 0, -1, "gamma2b")
    assert dual_form(g).coeffs == (QQ(-2), QQ(0), QQ(2))


def test_alpha_from_polynomial_examples():
    assert alpha_from_polynomial(QuadraticPolynomial.of(QQ, 1, 0, 1)).M == mx.matrix(QQ, ((0, -1), (1, 0)))
    assert alpha_from_polynomial(QuadraticPolynomial.of(QQ, 0, 0, 0)).M == mx.zeros(QQ)
    act = alpha_from_polynomial(QuadraticPolynomial.of(QQ, 1, 0, -1, "gamma2b"))
    assert act.M == mx.matrix(QQ, ((0, -1), (-1, 0)))
    assert act.d == QQ(1)


def test_conventions_convert():
    g = QuadraticPolynomial.of(QQ, 1, 3, 2, "gamma2b")
    assert g.to_gamma_b().coeffs == (QQ(1), QQ(6), QQ(2))
    assert g.to_gamma_b().to_gamma2b() == g


def test_kernel_generator_examples():
    assert kernel_generator(QuadraticPolynomial.of(QQ, 1, 0, 1)) == (QQ(-1), QQ(0), QQ(-1))
    assert kernel_generator(QuadraticPolynomial.of(QQ, 0, 0, 0)) == (QQ(0),) * 3


@given(residues, residues, residues)
def test_kernel_and_routes_mod_13(a, b, c):
    g = QuadraticPolynomial.of(F13, a, b, c)
    assert kernel_generator(g) == (F13(-a), F13(-b), F13(-c))
    assert alpha_from_polynomial(g).M == alpha_matrix(dual_form(g)).M


def test_proj_check_examples():
    rep = proj_spec_check(QuadraticPolynomial.of(QQ, 1, 0, -1, "gamma2b"))
    assert rep.ok
    assert rep.generator == mx.vector(QQ, (1, 0))
    assert rep.presentation() == "T^2-1"
    rep = proj_spec_check(QuadraticPolynomial.of(QQ, 1, 0, 0, "gamma2b"))
    assert rep.generator == mx.vector(QQ, (0, 1))
    assert rep.algebra.d == QQ(0)


def test_proj_check_preconditions():
    with pytest.raises(PreconditionError):
        proj_spec_check(QuadraticPolynomial.of(ModularRing(15), 1, 0, 1, "gamma2b"))
    with pytest.raises(PreconditionError):
        proj_spec_check(QuadraticPolynomial.of(QQ, 0, 0, 0, "gamma2b"))


def test_proj_check_mod_7_random():
    F = ModularRing(7)
    rng = random.Random(7)
    for _ in range(60):
        a, b, c = (rng.randrange(7) for _ in range(3))
        if (a, b, c) == (0, 0, 0):
            continue
        assert proj_spec_check(QuadraticPolynomial.of(F, a, b, c, "gamma2b")).ok
