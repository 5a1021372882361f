"""Elementary symmetric polynomials and reduction to them.

``t_ring(n)`` is K[T1..Tn]; ``s_ring(n)`` is K[S1..Sn] where Sk stands for
the k-th elementary symmetric polynomial.  The reduction is the classical
descent on lex-leading terms: a symmetric polynomial with leading term
c*T^a (a1 >= ... >= an) loses that term when c*e1^(a1-a2)...en^an is
subtracted.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Callable, Mapping, Optional

from ..errors import Cancelled, NotSymmetric, PreconditionError
from .base import Elem, Ring
from .poly import PolynomialRing
from .scalars import QQ


@lru_cache(maxsize=None)
def t_ring(n: int, base: Ring = QQ) -> PolynomialRing:
    return PolynomialRing(base, tuple(f"T{i}" for i in range(1, n + 1)))


@lru_cache(maxsize=None)
def s_ring(n: int, base: Ring = QQ) -> PolynomialRing:
    return PolynomialRing(base, tuple(f"S{i}" for i in range(1, n + 1)))


def elem_symmetric(n: int, k: int, base: Ring = QQ) -> Elem:
    """k-th elementary symmetric polynomial in T1..Tn; k = 0 gives 1."""
    if n < 1:
        raise PreconditionError("n must be >= 1")
    if not 0 <= k <= n:
        raise PreconditionError(f"k must lie in [0, {n}], got {k}")
    R = t_ring(n, base)
    terms = []
    for idx in combinations(range(n), k):
        e = [0] * n
        for i in idx:
            e[i] = 1
        terms.append((e, base.one_v))
    return Elem(R, R.from_terms(terms))


def _check_ring(P: Elem, n: Optional[int]) -> tuple[PolynomialRing, int]:
    R = P.ring
    if not isinstance(R, PolynomialRing):
        raise PreconditionError("expected a polynomial")
    if n is None:
        n = R.nvars
    if R != t_ring(n, R.base):
        raise PreconditionError(f"expected an element of {t_ring(n, R.base).describe()}")
    return R, n


def is_symmetric(P: Elem) -> bool:
    """Invariance under (1 2) and the n-cycle, which generate S_n."""
    R = P.ring
    n = R.nvars
    if n == 1:
        return True
    swap = (1, 0) + tuple(range(2, n))
    cycle = tuple((i + 1) % n for i in range(n))
    return R.permute(P.v, swap) == P.v and R.permute(P.v, cycle) == P.v


def symmetric_reduce(
    P: Elem, n: Optional[int] = None, cancel: Optional[Callable[[], bool]] = None
) -> Elem:
    """Express a symmetric polynomial in T1..Tn as a polynomial in S1..Sn.

    ``cancel`` is polled once per descent step; when it returns true the
    computation stops with :class:`Cancelled`.
    """
    R, n = _check_ring(P, n)
    if not is_symmetric(P):
        raise NotSymmetric("polynomial is not invariant under the symmetric group")
    B = R.base
    S = s_ring(n, B)
    e_pows = _ElemPowers(n, B)
    remaining = dict(P.v)
    out: dict = {}
    while remaining:
        if cancel is not None and cancel():
            raise Cancelled("symmetric reduction cancelled")
        lead = max(remaining)
        c = remaining[lead]
        if any(lead[i] < lead[i + 1] for i in range(n - 1)):
            raise NotSymmetric("leading exponent is not non-increasing")  # pragma: no cover
        s_exp = tuple(lead[i] - (lead[i + 1] if i + 1 < n else 0) for i in range(n))
        out[s_exp] = c
        for e, k in e_pows.product(s_exp):
            val = B.sub(remaining.get(e, B.zero_v), B.mul(c, k))
            if B.is_zero(val):
                remaining.pop(e, None)
            else:
                remaining[e] = val
    return Elem(S, S.from_terms(out.items()))


class _ElemPowers:
    """Memoized products e1^k1 ... en^kn as payloads of K[T1..Tn]."""

    def __init__(self, n: int, base: Ring):
        self.R = t_ring(n, base)
        self.n = n
        self.e = [elem_symmetric(n, k, base).v for k in range(1, n + 1)]
        self.powers: dict = {}
        self.products: dict = {}

    def power(self, i: int, k: int):
        key = (i, k)
        if key not in self.powers:
            self.powers[key] = self.R.one_v if k == 0 else self.R.mul(self.power(i, k - 1), self.e[i])
        return self.powers[key]

    def product(self, exps: tuple[int, ...]):
        if exps not in self.products:
            acc = self.R.one_v
            for i, k in enumerate(exps):
                if k:
                    acc = self.R.mul(acc, self.power(i, k))
            self.products[exps] = acc
        return self.products[exps]


def substitute(P: Elem, assignment: Mapping[str, object], target: Optional[Ring] = None) -> Elem:
    """Exact evaluation of ``P`` with every occurring variable assigned.

    Values may be Elems, ints or Fractions; plain numbers are taken in the
    coefficient ring of ``P``.
    """
    R = P.ring
    if not isinstance(R, PolynomialRing):
        raise PreconditionError("substitute expects a polynomial")
    values = {k: v if isinstance(v, Elem) else R.base(v) for k, v in assignment.items()}
    return R.evaluate(P.v, values, target)


def elementary_values(values, base: Ring = QQ) -> list[Elem]:
    """e1..en evaluated at a numeric tuple (the coefficients of prod(X - t_i) up to sign)."""
    ts = [v if isinstance(v, Elem) else base(v) for v in values]
    coeffs = [base.one()]
    for t in ts:
        nxt = coeffs + [base.zero()]
        for j in range(1, len(nxt)):
            nxt[j] = nxt[j] + coeffs[j - 1] * t
        coeffs = nxt
    return coeffs[1:]


def to_s_assignment(values, base: Ring = QQ) -> dict[str, Elem]:
    return {f"S{k}": v for k, v in enumerate(elementary_values(values, base), start=1)}


def to_t_assignment(values, base: Ring = QQ) -> dict[str, Elem]:
    return {f"T{i}": v if isinstance(v, Elem) else base(v) for i, v in enumerate(values, start=1)}
