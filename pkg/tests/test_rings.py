from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from quadcover.errors import InvalidRing, NotInvertible, NotSymmetric, RingMismatch, Undecided
from quadcover.rings import (
    QQ,
    ModularRing,
    PolynomialRing,
    QuotientRing,
    arith,
    elem_symmetric,
    element_from_json,
    element_to_json,
    is_symmetric,
    rank,
    ring_from_json,
    ring_to_json,
    s_ring,
    substitute,
    symmetric_reduce,
    t_ring,
)

odd_moduli = st.integers(min_value=1, max_value=200).map(lambda k: 2 * k + 1)


def test_half_examples():
    assert arith("half", ModularRing(5)(1)) == ModularRing(5)(3)
    assert QQ(0).half() == QQ(0)
    assert QQ(3).half() == QQ(Fraction(3, 2))


def test_is_unit_mod_15():
    F = ModularRing(15)
    assert arith("is_unit", F(3)) is False
    assert F(7).is_unit() is True
    assert F(7) * F(7).inv() == F(1)
    with pytest.raises(NotInvertible):
        F(5).inv()


def test_even_modulus_rejected():
    with pytest.raises(InvalidRing):
        ModularRing(10)
    with pytest.raises(InvalidRing):
        ModularRing(1)


@given(odd_moduli, st.integers())
def test_modular_unit_is_gcd(m, x):
    F = ModularRing(m)
    assert F(x).is_unit() is (gcd(x, m) == 1)
    assert 2 * F(x).half() == F(x)


@given(odd_moduli, st.integers())
def test_modular_nilpotent_matches_powers(m, x):
    F = ModularRing(m)
    brute = any(pow(x, k, m) == 0 for k in range(1, m.bit_length() + 2))
    assert F(x).is_nilpotent() is brute


def test_mismatched_rings():
    with pytest.raises(RingMismatch):
        ModularRing(5)(1) + ModularRing(7)(1)


def test_polynomial_arithmetic_and_format():
    R = PolynomialRing(QQ, ("x", "y"))
    x, y = R.gens()
    p = (x + y) ** 2
    assert p == x**2 + 2 * x * y + y**2
    assert str(x**2 - 4 * y) == "x^2-4*y"
    assert R("x^2 - 4*y") == x**2 - 4 * y
    assert (x + 1).is_unit() is False
    assert R(3).is_unit() is True


def test_polynomial_unit_with_nilpotent_part():
    R = PolynomialRing(ModularRing(9), ("s",))
    u = R("1 + 3*s")
    assert u.is_unit() is True
    assert u * u.inv() == R(1)


def test_quotient_ring():
    base = PolynomialRing(ModularRing(5), ("U",))
    Q = QuotientRing.of(base, "U^2+1")
    U = Q.gen("U")
    assert U * U == Q(-1)
    assert U.is_unit() is True
    assert U * U.inv() == Q(1)
    # U^2 + 1 = (U - 2)(U + 2) mod 5
    assert (U - 2).is_unit() is False


def test_quotient_over_non_field_is_undecided():
    base = PolynomialRing(ModularRing(15), ("U",))
    Q = QuotientRing.of(base, "U^2-2")
    assert Q.gen("U").is_unit() is None
    with pytest.raises(Undecided):
        Q.gen("U").inv()


@pytest.mark.parametrize(
    "desc",
    [
        {"kind": "rational"},
        {"kind": "modular", "m": 15},
        {"kind": "polynomial", "base": {"kind": "rational"}, "vars": ["a", "b"]},
        {
            "kind": "quotient",
            "base": {"kind": "polynomial", "base": {"kind": "modular", "m": 7}, "vars": ["U"]},
            "modulus": "U^2-3",
        },
    ],
)
def test_ring_json_roundtrip(desc):
    R = ring_from_json(desc)
    assert ring_from_json(ring_to_json(R)) == R


def test_element_json_roundtrip():
    R = PolynomialRing(QQ, ("a", "b"))
    p = R("1/2*a^2*b - 3")
    assert element_from_json(R, element_to_json(p)) == p
    assert element_from_json(QQ, "-3/4") == QQ(Fraction(-3, 4))


def test_elem_symmetric_examples():
    T = t_ring(2)
    T1, T2 = T.gens()
    assert elem_symmetric(2, 1) == T1 + T2
    T1, T2, T3 = t_ring(3).gens()
    assert elem_symmetric(3, 3) == T1 * T2 * T3
    assert elem_symmetric(4, 0) == t_ring(4).one()


def test_symmetric_reduce_examples():
    T1, T2 = t_ring(2).gens()
    S1, S2 = s_ring(2).gens()
    assert symmetric_reduce(T1**2 + T2**2) == S1**2 - 2 * S2
    assert symmetric_reduce(elem_symmetric(3, 2)) == s_ring(3).gen("S2")
    with pytest.raises(NotSymmetric):
        symmetric_reduce(T1)
    assert not is_symmetric(T1 - T2)


def test_substitute_examples():
    T1, T2 = t_ring(2).gens()
    assert substitute(T1 + T2, {"T1": 1, "T2": 2}) == QQ(3)
    S1, S2 = s_ring(2).gens()
    assert substitute(S1**2 - 4 * S2, {"S1": 3, "S2": 2}) == QQ(1)
    assert substitute(s_ring(2).zero(), {"S1": 5, "S2": 7}) == QQ(0)


def test_rank_over_prime_field():
    F = ModularRing(7)
    rows = [[F(1), F(2)], [F(2), F(4)]]
    assert rank(rows, F) == 1
