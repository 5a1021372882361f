"""The double cover K[T1..Tn]^{A_n} over K[T1..Tn]^{S_n} in the affine chart.

Alternating-invariant polynomials form a free module over the symmetric
ones with basis {1, V}, V = ∏_{i<j}(Ti - Tj); V² is the generic
discriminant.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Callable, Optional

from .errors import NotAlternating, PreconditionError
from .rings import QQ, Elem, PolynomialRing, Ring, symmetric_reduce, t_ring

def max_group_degree() -> int:
    """Largest n for exhaustive permutation checks (QUADCOVER_MAX_N, default 5)."""
    try:
        return int(os.environ.get("QUADCOVER_MAX_N", "5"))
    except ValueError:
        return 5


def vandermonde(n: int, base: Ring = QQ) -> Elem:
    """∏_{i<j} (Ti - Tj)."""
    if n < 2:
        raise PreconditionError("the Vandermonde needs n >= 2")
    return _vandermonde(n, base)


@lru_cache(maxsize=None)
def _vandermonde(n: int, base: Ring) -> Elem:
    gens = t_ring(n, base).gens()
    out = t_ring(n, base).one()
    for i in range(n):
        for j in range(i + 1, n):
            out = out * (gens[i] - gens[j])
    return out


def sign(perm: tuple[int, ...]) -> int:
    s, seen = 1, set()
    for i in range(len(perm)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def act(P: Elem, perm: tuple[int, ...]) -> Elem:
    """σ·P, substituting T_i ↦ T_σ(i)."""
    return Elem(P.ring, P.ring.permute(P.v, perm))


def even_permutations(n: int):
    return (p for p in permutations(range(n)) if sign(p) == 1)


def is_alternating_invariant(P: Elem) -> bool:
    """Invariance under A_n: every even permutation up to QUADCOVER_MAX_N, else the 3-cycles (1 2 k)."""
    n = P.ring.nvars
    if n < 3:
        return True
    if n <= max_group_degree():
        perms = even_permutations(n)
    else:
        perms = []
        for k in range(2, n):
            p = list(range(n))
            p[0], p[1], p[k] = 1, k, 0
            perms.append(tuple(p))
    return all(act(P, p) == P for p in perms)


@dataclass(frozen=True)
class AlternatingDecomposition:
    """P = P⁺ + V·Q with P⁺, Q written in S1..Sn."""

    symmetric_part: Elem
    vandermonde_cofactor: Elem
    n: int

    def reconstruct(self) -> Elem:
        from .rings import elem_symmetric, substitute

        base = self.symmetric_part.ring.base
        e = {f"S{k}": elem_symmetric(self.n, k, base) for k in range(1, self.n + 1)}
        R = t_ring(self.n, base)
        return substitute(self.symmetric_part, e, R) + vandermonde(self.n, base) * substitute(
            self.vandermonde_cofactor, e, R
        )


def alt_decompose(
    P: Elem, n: Optional[int] = None, transposition: tuple[int, int] = (0, 1)
) -> AlternatingDecomposition:
    """Split an A_n-invariant polynomial along the basis {1, V}."""
    R = P.ring
    if not isinstance(R, PolynomialRing):
        raise PreconditionError("expected a polynomial in T1..Tn")
    if n is None:
        n = R.nvars
    if R != t_ring(n, R.base) or n < 2:
        raise PreconditionError(f"expected an element of {t_ring(max(n, 2), R.base).describe()}")
    if not is_alternating_invariant(P):
        raise NotAlternating("polynomial is not invariant under the alternating group")
    i, j = transposition
    if i == j:
        raise PreconditionError("transposition must move two distinct indices")
    tau = list(range(n))
    tau[i], tau[j] = j, i
    tP = act(P, tuple(tau))
    plus = (P + tP).half()
    minus = (P - tP).half()
    V = vandermonde(n, R.base)
    try:
        Q = Elem(R, R.divexact(minus.v, V.v))
    except PreconditionError:
        raise NotAlternating("V does not divide the odd part") from None
    return AlternatingDecomposition(symmetric_reduce(plus, n), symmetric_reduce(Q, n), n)


def generic_discriminant(n: int, base: Ring = QQ, cancel: Optional[Callable[[], bool]] = None) -> Elem:
    """V² in the elementary symmetric coordinates S1..Sn."""
    V = vandermonde(n, base)
    return symmetric_reduce(V * V, n, cancel=cancel)


def p1p1_identity_check(base: Ring = QQ) -> bool:
    """(X1Y2 - Y1X2)² = (X1Y2 + Y1X2)² - 4(X1X2)(Y1Y2) in four variables."""
    R = PolynomialRing(base, ("X1", "Y1", "X2", "Y2"))
    X1, Y1, X2, Y2 = R.gens()
    lhs = (X1 * Y2 - Y1 * X2) ** 2
    rhs = (X1 * Y2 + Y1 * X2) ** 2 - 4 * (X1 * X2) * (Y1 * Y2)
    return lhs == rhs


def discriminant_report(n: int, base: Ring = QQ) -> dict:
    D = generic_discriminant(n, base)
    return {
        "n": n,
        "discriminant": str(D),
        "terms": D.to_json(),
        "vars": list(D.ring.variables),
        "N": f"O({1 - n})",
    }
