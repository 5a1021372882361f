import random
from fractions import Fraction
from itertools import permutations

import pytest

from quadcover.errors import NotAlternating
from quadcover.identities import expand_symmetric, random_symmetric
from quadcover.rings import QQ, s_ring, symmetric_reduce, t_ring
from quadcover.symcover import (
    act,
    alt_decompose,
    discriminant_report,
    generic_discriminant,
    is_alternating_invariant,
    p1p1_identity_check,
    sign,
    vandermonde,
)


def test_vandermonde_examples():
    T1, T2 = t_ring(2).gens()
    assert vandermonde(2) == T1 - T2
    assert len(vandermonde(3).v) == 6


def test_sign_matches_inversion_count():
    for p in permutations(range(4)):
        inv = sum(p[i] > p[j] for i in range(4) for j in range(i + 1, 4))
        assert sign(p) == (-1) ** inv


def test_vandermonde_is_alternating():
    V = vandermonde(4)
    for p in permutations(range(4)):
        assert act(V, p) == sign(p) * V


def test_alt_decompose_examples():
    T1, _ = t_ring(2).gens()
    S1, _ = s_ring(2).gens()
    dec = alt_decompose(T1)
    assert dec.symmetric_part == Fraction(1, 2) * S1
    assert dec.vandermonde_cofactor == s_ring(2)(Fraction(1, 2))

    P = expand_symmetric(random_symmetric(3, random.Random(1)), 3)
    dec = alt_decompose(P)
    assert dec.symmetric_part == symmetric_reduce(P)
    assert dec.vandermonde_cofactor.is_zero()

    dec = alt_decompose(vandermonde(3))
    assert dec.symmetric_part.is_zero()
    assert dec.vandermonde_cofactor == s_ring(3).one()


def test_alt_decompose_rejects_non_invariant():
    T1, T2, T3 = t_ring(3).gens()
    assert not is_alternating_invariant(T1)
    with pytest.raises(NotAlternating):
        alt_decompose(T1 * T2)


def test_reconstruct():
    rng = random.Random(2)
    for n in (2, 3, 4):
        A, B = random_symmetric(n, rng), random_symmetric(n, rng)
        P = expand_symmetric(A, n) + vandermonde(n) * expand_symmetric(B, n)
        assert alt_decompose(P).reconstruct() == P


def test_discriminant_examples():
    S1, S2 = s_ring(2).gens()
    assert generic_discriminant(2) == S1**2 - 4 * S2
    S1, S2, S3 = s_ring(3).gens()
    expected = S1**2 * S2**2 - 4 * S2**3 - 4 * S1**3 * S3 + 18 * S1 * S2 * S3 - 27 * S3**2
    assert generic_discriminant(3) == expected
    # roots 0, 1, 2: S = (3, 2, 0), and ∏(ri - rj)² = 4
    assert s_ring(3).evaluate(expected.v, {"S1": 3, "S2": 2, "S3": 0}, QQ) == QQ(4)


def test_discriminant_report():
    rep = discriminant_report(2)
    assert rep["discriminant"] == "S1^2-4*S2"
    assert rep["N"] == "O(-1)"
    assert rep["vars"] == ["S1", "S2"]


def test_p1p1_identity():
    assert p1p1_identity_check()
    # numeric instance: (X1, Y1, X2, Y2) = (1, 2, 3, 4)
    assert (1 * 4 - 2 * 3) ** 2 == (1 * 4 + 2 * 3) ** 2 - 4 * (1 * 3) * (2 * 4)


def test_alternating_check_above_cap(monkeypatch):
    monkeypatch.setenv("QUADCOVER_MAX_N", "3")
    assert is_alternating_invariant(vandermonde(4))
    T = t_ring(4).gens()
    assert not is_alternating_invariant(T[0] * T[1])
