from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from quadcover import matrix as mx
from quadcover.binforms import (
    BinaryForm,
    ModuleAction,
    alpha_matrix,
    covering_from_form,
    eval_quadratic,
    invertible_generator,
    is_etale,
    is_primitive,
    linear_form,
    polarize,
    quadratic_map,
)
from quadcover.errors import PreconditionError
from quadcover.quadalg import section_witness_check
from quadcover.rings import QQ, ModularRing

half = Fraction(1, 2)
small = st.integers(-30, 30)


def test_eval_quadratic_examples():
    assert eval_quadratic(BinaryForm.of(QQ, 2, 0, 2), (1, 1)) == QQ(2)
    assert eval_quadratic(BinaryForm.of(QQ, 5, -7, 3), (0, 0)) == QQ(0)
    assert eval_quadratic(BinaryForm.of(QQ, 2, 1, 0), (1, 0)) == QQ(1)


def test_polarization_examples():
    q = quadratic_map(BinaryForm.of(QQ, 2, 1, 0))
    assert polarize(q, (1, 0), (0, 1), QQ) == QQ(1)
    q = quadratic_map(BinaryForm.of(QQ, 3, 0, 5))
    assert polarize(q, (1, 0), (0, 1), QQ) == QQ(0)


@given(small, small, small)
def test_linear_form_inverts_quadratic_map(a, b, c):
    f = BinaryForm.of(ModularRing(97), a, b, c)
    assert linear_form(quadratic_map(f), f.ring).coeffs == f.coeffs


def test_primitivity_examples():
    F = ModularRing(15)
    assert is_primitive(BinaryForm.of(F, 3, 5, 0)) is True
    assert is_primitive(BinaryForm.of(F, 3, 6, 9)) is False
    assert is_primitive(BinaryForm.of(QQ, 0, 0, Fraction(1, 7))) is True
    assert is_primitive(BinaryForm.of(QQ, 0, 0, 0)) is False


def test_alpha_matrix_examples():
    act = alpha_matrix(BinaryForm.of(QQ, 2, 1, 0))
    assert act.M == mx.matrix(QQ, ((-half, 0), (1, half)))
    assert act.d == QQ(Fraction(1, 4))
    zero = alpha_matrix(BinaryForm.of(QQ, 0, 0, 0))
    assert zero.M == mx.zeros(QQ) and zero.d == QQ(0)
    rot = alpha_matrix(BinaryForm.of(QQ, 2, 0, 2))
    assert rot.M == mx.matrix(QQ, ((0, -1), (1, 0))) and rot.d == QQ(-1)


def test_module_action_validation():
    with pytest.raises(PreconditionError):
        ModuleAction.from_matrix(QQ, mx.matrix(QQ, ((1, 0), (0, 1))))
    with pytest.raises(PreconditionError):
        ModuleAction(QQ, mx.matrix(QQ, ((0, -1), (1, 0))), QQ(1))


def test_covering_examples():
    cov = covering_from_form(BinaryForm.of(QQ, 2, 0, 2))
    assert cov.algebra.d == QQ(-1)
    assert cov.presentation() == "T^2+4"
    hyper = BinaryForm.of(QQ, 0, 1, 0)
    cov = covering_from_form(hyper)
    assert cov.algebra.d == QQ(Fraction(1, 4))
    assert is_etale(hyper) is True
    section_witness_check(cov.algebra, QQ(half))
    assert covering_from_form(BinaryForm.of(QQ, 1, 0, 0)).algebra.d == QQ(0)


@given(small, small, small)
def test_t_squared_is_discriminant(a, b, c):
    f = BinaryForm.of(QQ, a, b, c)
    cov = covering_from_form(f)
    T = cov.t_to_alpha()
    assert T * T == cov.algebra(f.discriminant())


def test_invertible_generator_examples():
    g = invertible_generator(BinaryForm.of(QQ, 2, 1, 0))
    assert g.vector == mx.vector(QQ, (1, 0))
    assert g.value == QQ(2)
    assert g.det == QQ(1)
    g = invertible_generator(BinaryForm.of(QQ, 0, 1, 0))
    assert g.vector == mx.vector(QQ, (1, 1)) and g.value == QQ(2)
    with pytest.raises(PreconditionError):
        invertible_generator(BinaryForm.of(ModularRing(9), 3, 3, 3))


def test_convention_tag():
    f = BinaryForm.of(QQ, 1, 2, 3, convention="gamma2b")
    with pytest.raises(PreconditionError):
        eval_quadratic(f, (1, 0))
    assert f.to_phi().coeffs == f.coeffs
