"""Exact Gaussian elimination over a field (QQ or Z/p)."""

from __future__ import annotations

from typing import Sequence

from ..errors import PreconditionError
from .base import Elem, Ring


def _require_field(ring: Ring) -> None:
    if not ring.is_field:
        raise PreconditionError(f"{ring.describe()} is not a field; exact rank needs one")


def row_echelon(rows: Sequence[Sequence[Elem]], ring: Ring) -> list[list]:
    """Reduced row echelon form as payload rows (zero rows dropped)."""
    _require_field(ring)
    m = [[ring(x).v for x in row] for row in rows]
    if not m:
        return []
    ncols = len(m[0])
    if any(len(r) != ncols for r in m):
        raise PreconditionError("ragged matrix")
    pivot_row = 0
    for col in range(ncols):
        pr = next((r for r in range(pivot_row, len(m)) if not ring.is_zero(m[r][col])), None)
        if pr is None:
            continue
        m[pivot_row], m[pr] = m[pr], m[pivot_row]
        inv = ring.inv(m[pivot_row][col])
        m[pivot_row] = [ring.mul(x, inv) for x in m[pivot_row]]
        for r in range(len(m)):
            if r != pivot_row and not ring.is_zero(m[r][col]):
                f = m[r][col]
                m[r] = [ring.sub(x, ring.mul(f, y)) for x, y in zip(m[r], m[pivot_row])]
        pivot_row += 1
        if pivot_row == len(m):
            break
    return m[:pivot_row]


def rank(rows: Sequence[Sequence[Elem]], ring: Ring) -> int:
    return len(row_echelon(rows, ring))


def in_span(rows: Sequence[Sequence[Elem]], vector: Sequence[Elem], ring: Ring) -> bool:
    """Whether ``vector`` is a linear combination of ``rows``."""
    return rank(list(rows) + [list(vector)], ring) == rank(rows, ring)
