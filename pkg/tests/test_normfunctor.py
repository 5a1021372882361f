import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from quadcover import matrix as mx
from quadcover.binforms import BinaryForm, ModuleAction, alpha_matrix
from quadcover.errors import PreconditionError
from quadcover.identities import random_form, random_theta
from quadcover.normfunctor import (
    CoverModulePair,
    FormMorphism,
    norm_form,
    norm_value,
    nu_equals_q,
    pullback,
    roundtrip_action,
    roundtrip_form,
    skew_symmetry_check,
    transfer_morphism,
)
from quadcover.rings import QQ, ModularRing

half = Fraction(1, 2)
F97 = ModularRing(97)
residues = st.integers(0, 96)


def rot():
    return ModuleAction.from_matrix(QQ, mx.matrix(QQ, ((0, -1), (1, 0))))


def test_norm_value_examples():
    assert norm_value(rot(), (1, 0)) == QQ(1)
    assert norm_value(rot(), (0, 0)) == QQ(0)


def test_norm_form_examples():
    assert norm_form(rot()).coeffs == (QQ(2), QQ(0), QQ(2))
    zero = ModuleAction.from_matrix(QQ, mx.zeros(QQ))
    assert norm_form(zero).coeffs == (QQ(0),) * 3
    act = ModuleAction.from_matrix(QQ, mx.matrix(QQ, ((-half, 0), (1, half))))
    assert norm_form(CoverModulePair.from_action(act)).coeffs == (QQ(2), QQ(1), QQ(0))


def test_roundtrip_examples():
    assert roundtrip_form(BinaryForm.of(QQ, 2, 1, 0)).ok
    assert roundtrip_form(BinaryForm.of(QQ, 0, 0, 0)).ok
    rng = random.Random(0)
    assert all(roundtrip_form(random_form(F97, rng)).ok for _ in range(200))


@given(residues, residues, residues)
def test_roundtrip_action(p, q, r):
    act = ModuleAction.from_matrix(F97, mx.matrix(F97, ((p, q), (r, -p))))
    assert roundtrip_action(act)


@given(residues, residues, residues, residues, residues)
def test_nu_equals_q_modular(a, b, c, x, y):
    assert nu_equals_q(BinaryForm.of(F97, a, b, c), (x, y))


def test_transfer_example():
    theta = mx.matrix(QQ, ((1, 1), (0, 1)))
    target = BinaryForm.of(QQ, 1, 0, 1)
    assert pullback(target, theta).coeffs == (QQ(1), QQ(1), QQ(2))
    m = FormMorphism.pull(target, theta)
    det, checks = transfer_morphism(m)
    assert det == QQ(1) and checks.ok
    expected = mx.matrix(QQ, ((0, -half), (half, half)))
    assert mx.mat_mul(theta, alpha_matrix(m.source).M) == expected
    assert mx.mat_mul(alpha_matrix(target).M, theta) == expected


def test_transfer_identity():
    target = BinaryForm.of(QQ, 3, -1, 4)
    m = FormMorphism.pull(target, mx.identity(QQ))
    assert m.source.coeffs == target.coeffs
    assert transfer_morphism(m)[1].ok


def test_morphisms_compose():
    rng = random.Random(5)
    for _ in range(20):
        f3 = random_form(QQ, rng)
        m2 = FormMorphism.pull(f3, random_theta(QQ, rng))
        m1 = FormMorphism.pull(m2.source, random_theta(QQ, rng))
        comp = m1.then(m2)
        assert comp.det() == m1.det() * m2.det()
        assert transfer_morphism(comp)[1].ok


def test_morphism_rejects_wrong_source():
    with pytest.raises(PreconditionError):
        FormMorphism(mx.identity(QQ), BinaryForm.of(QQ, 1, 0, 0), BinaryForm.of(QQ, 0, 0, 1))


def test_skew_symmetry_examples():
    M = ((QQ(1), QQ(0)), (QQ(0), QQ(-1)))
    assert skew_symmetry_check(M, (1, 0), (0, 1))
    assert skew_symmetry_check(M, (2, 3), (2, 3))
    with pytest.raises(PreconditionError):
        skew_symmetry_check(((QQ(1), QQ(0)), (QQ(0), QQ(1))), (1, 0), (0, 1))
    F = ModularRing(11)
    rng = random.Random(11)
    for _ in range(100):
        p, q, r = (F(rng.randrange(11)) for _ in range(3))
        v = (rng.randrange(11), rng.randrange(11))
        w = (rng.randrange(11), rng.randrange(11))
        assert skew_symmetry_check(((p, q), (r, -p)), v, w)
