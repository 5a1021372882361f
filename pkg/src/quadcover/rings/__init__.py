"""Exact rings: QQ, Z/m (m odd), multivariate polynomials, univariate quotients."""

from .base import Elem, Ring, and3, or3
from .linalg import in_span, rank, row_echelon
from .poly import PolynomialRing
from .quotient import QuotientRing
from .scalars import QQ, ModularRing, RationalField, is_prime
from .serialize import element_from_json, element_to_json, parse_element, ring_from_json, ring_to_json
from .symmetric import (
    elem_symmetric,
    elementary_values,
    is_symmetric,
    s_ring,
    substitute,
    symmetric_reduce,
    t_ring,
    to_s_assignment,
    to_t_assignment,
)

__all__ = [
    "arith",
    "Elem",
    "Ring",
    "QQ",
    "RationalField",
    "ModularRing",
    "PolynomialRing",
    "QuotientRing",
    "and3",
    "or3",
    "is_prime",
    "rank",
    "row_echelon",
    "in_span",
    "ring_from_json",
    "ring_to_json",
    "element_from_json",
    "element_to_json",
    "parse_element",
    "elem_symmetric",
    "elementary_values",
    "is_symmetric",
    "symmetric_reduce",
    "substitute",
    "s_ring",
    "t_ring",
    "to_s_assignment",
    "to_t_assignment",
]


def arith(op: str, x: Elem, y: Elem | None = None):
    """Dispatch by name: add, sub, mul, neg, half, is_unit, inv."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "neg":
        return -x
    if op == "half":
        return x.half()
    if op == "is_unit":
        return x.is_unit()
    if op == "inv":
        return x.inv()
    raise ValueError(f"unknown operation {op!r}")
