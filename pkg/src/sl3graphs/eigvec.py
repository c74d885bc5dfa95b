"""Closed-form Perron-Frobenius eigenvector values for every graph family.

Every family's adjacency operator has Perron-Frobenius eigenvalue 3 (the dimension of
the generating module), and the positive eigenvector is unique up to scale; the values
here are the minimal integral normalizations, so 3*v(u) = sum of mult*v(target) over
the out-edges of u holds as an exact integer identity.
"""
from __future__ import annotations

from .categories import CategoryId
from .errors import InvalidVertexError
from .graphs import IntPair, vertex_set


def pf_value(cat: CategoryId, v: IntPair) -> int:
    """Eigenvector entry at a vertex (positive integer)."""
    if not vertex_set(cat)(v):
        raise InvalidVertexError(f"{v} is not a vertex of {cat.value}")
    p, q = v
    if cat is CategoryId.REGULAR:
        return (p + 1) * (q + 1) * (p + q + 2) // 2
    if cat is CategoryId.N1:
        return _n1_value(p, q)
    if cat is CategoryId.N2:
        return _n1_value(q, p)
    if cat is CategoryId.N3:
        if (p, q) == (-1, -1):
            return 1
        if p == -1 or q == -1:
            return 3
        return 6
    if cat is CategoryId.M1:
        return p + 1
    if cat is CategoryId.M2:
        return 1 if p == -1 else 2
    if cat is CategoryId.M3:
        return q + 1
    if cat is CategoryId.M4:
        return 1 if q == -1 else 2
    if cat is CategoryId.M5:
        return p + q + 1
    if cat is CategoryId.M6:
        return 1 if p + q == -1 else 2
    return 1  # generic and Whittaker families


def _n1_value(p: int, q: int) -> int:
    if p == -1 or p + q == -2:
        return q + 1
    if p + q > -2:
        return 2 * q + p + 3
    return q - p


def d_simple(v: IntPair) -> int:
    """Largest weight-space dimension of the simple at an upper middle weight.

    Closed form of the printed 5x5 table; the two branches come from the two Verma
    embeddings with parameters (q+1)(-1,2) and (q-p+2)(1,1).
    """
    p, q = v
    if not (p <= -1 and q >= 0):
        raise InvalidVertexError(f"{v} is not an upper middle weight")
    if p + q <= -2 or p == -1:
        return q + 1
    return p + q + 2


def d_object(v: IntPair) -> int:
    """Largest weight-space dimension of the indecomposable object at v in the N1 family.

    Singular weights carry the simple itself; regular ones carry an extension with two
    copies of the simple and one copy of its partner across the diagonal wall, where
    w0 . (p, q) = (-q-2, -p-2).  Always equals pf_value(N1, v).
    """
    p, q = v
    if not (p <= -1 and q >= 0):
        raise InvalidVertexError(f"{v} is not an upper middle weight")
    if p == -1 or p + q == -2:
        return d_simple(v)
    return 2 * d_simple(v) + d_simple((-q - 2, -p - 2))


def verma_quotient_d(a: int, b: int) -> int:
    """Largest weight-space dimension of a Verma quotient cut at depth a*alpha + b*beta."""
    if a < 1 or b < 1:
        raise ValueError("parameters must be >= 1")
    return max(a, b)
