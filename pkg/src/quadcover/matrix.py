"""Small dense matrices over a ring, as tuples of row tuples of Elems.

Vectors are columns: ``mat_vec(M, v)`` is M·v and the j-th column of M is
the image of the j-th basis vector.
"""

from __future__ import annotations

from typing import Sequence

from .rings import Elem, Ring

Matrix = tuple[tuple[Elem, ...], ...]
Vector = tuple[Elem, ...]


def matrix(ring: Ring, rows: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(ring(x) for x in row) for row in rows)


def vector(ring: Ring, entries: Sequence) -> Vector:
    return tuple(ring(x) for x in entries)


def identity(ring: Ring, n: int = 2) -> Matrix:
    return tuple(tuple(ring(1 if i == j else 0) for j in range(n)) for i in range(n))


def zeros(ring: Ring, n: int = 2) -> Matrix:
    return tuple(tuple(ring(0) for _ in range(n)) for _ in range(n))


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    return tuple(
        tuple(sum((A[i][k] * B[k][j] for k in range(1, len(B))), A[i][0] * B[0][j]) for j in range(len(B[0])))
        for i in range(len(A))
    )


def mat_vec(A: Matrix, v: Vector) -> Vector:
    return tuple(sum((A[i][k] * v[k] for k in range(1, len(v))), A[i][0] * v[0]) for i in range(len(A)))


def mat_scale(c, A: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in A)


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(A, B))


def transpose(A: Matrix) -> Matrix:
    return tuple(zip(*A))


def trace(A: Matrix) -> Elem:
    return sum((A[i][i] for i in range(1, len(A))), A[0][0])


def det2(A: Matrix) -> Elem:
    return A[0][0] * A[1][1] - A[0][1] * A[1][0]


def det3(A: Matrix) -> Elem:
    return (
        A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1])
        - A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0])
        + A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0])
    )


def wedge(v: Vector, w: Vector) -> Elem:
    """Coefficient of v∧w on the basis e1∧e2."""
    return v[0] * w[1] - v[1] * w[0]


def columns(A: Matrix) -> tuple[Vector, ...]:
    return tuple(tuple(A[i][j] for i in range(len(A))) for j in range(len(A[0])))


def first_difference(A: Matrix, B: Matrix):
    """(i, j, a, b) for the first entry where A and B differ, else None."""
    for i, (r, s) in enumerate(zip(A, B)):
        for j, (x, y) in enumerate(zip(r, s)):
            if x != y:
                return (i, j, x, y)
    return None


def to_json(A: Matrix):
    return [[x.to_json() for x in row] for row in A]
