"""The Grothendieck ring of finite-dimensional sl3-modules.

The ring is Z[x, y] with x, y the classes of the two 3-dimensional simples.  The
distinguished basis indexed by dominant labels (i, j) mirrors the Clebsch-Gordan rule,
so converting a product of basis polynomials back to the basis yields exact tensor
multiplicities.  All arithmetic is integer-exact.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

HWLabel = tuple[int, int]


class Poly2:
    """Sparse bivariate integer polynomial in x, y; zero coefficients are never stored."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[tuple[int, int], int] | None = None):
        self.coeffs = {m: c for m, c in (coeffs or {}).items() if c != 0}

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly2) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "Poly2") -> "Poly2":
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            elif m in out:
                del out[m]
        return Poly2(out)

    def __neg__(self) -> "Poly2":
        return Poly2({m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other: "Poly2") -> "Poly2":
        return self + (-other)

    def __mul__(self, other: "Poly2") -> "Poly2":
        f, g = self.coeffs, other.coeffs
        if len(g) < len(f):
            f, g = g, f
        out: dict[tuple[int, int], int] = {}
        for (a, b), c in f.items():
            for (d, e), k in g.items():
                m = (a + d, b + e)
                v = out.get(m, 0) + c * k
                if v:
                    out[m] = v
                elif m in out:
                    del out[m]
        return Poly2(out)

    def scale(self, c: int) -> "Poly2":
        return Poly2({m: c * v for m, v in self.coeffs.items()})

    def evaluate(self, x: int, y: int) -> int:
        return sum(c * x**a * y**b for (a, b), c in self.coeffs.items())

    def swap_xy(self) -> "Poly2":
        return Poly2({(b, a): c for (a, b), c in self.coeffs.items()})

    def leading_monomial(self) -> tuple[int, int]:
        """Largest monomial in total-degree order, ties broken lexicographically with x > y."""
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.coeffs, key=lambda m: (m[0] + m[1], m[0]))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly2(0)"
        terms = []
        for (a, b), c in sorted(self.coeffs.items(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0])):
            mono = "".join(s for s, e in (("x", a), ("y", b)) for s in ([f"{s}^{e}"] if e > 1 else [s] * (e == 1)))
            terms.append(f"{c}{'*' if mono else ''}{mono}")
        return "Poly2(" + " + ".join(terms).replace("+ -", "- ") + ")"


POLY_ONE = Poly2({(0, 0): 1})
POLY_X = Poly2({(1, 0): 1})
POLY_Y = Poly2({(0, 1): 1})


def _check_label(l: HWLabel) -> HWLabel:
    i, j = l
    if i < 0 or j < 0:
        raise ValueError(f"highest-weight label must be non-negative, got {l}")
    return (int(i), int(j))


@lru_cache(maxsize=None)
def upoly(i: int, j: int) -> Poly2:
    """Basis polynomial for the label (i, j).

    Built from the x-multiplication recursion
        x*U[i,j] = U[i+1,j] + U[i-1,j+1] + U[i,j-1]
    with U zero outside the dominant quadrant and U[0,0] = 1; the first column comes
    from the symmetry U[i,j](x,y) = U[j,i](y,x).  The y-recursion is a consequence and
    is verified by test, not used here.
    """
    if i < 0 or j < 0:
        return Poly2()
    if i == 0 and j == 0:
        return POLY_ONE
    if i == 0:
        return upoly(j, 0).swap_xy()
    return POLY_X * upoly(i - 1, j) - upoly(i - 2, j + 1) - upoly(i - 1, j - 1)


def to_ubasis(f: Poly2) -> dict[HWLabel, int]:
    """Integer coordinates of f in the U-basis, by peeling leading monomials.

    Each step asserts the triangularity that makes peeling valid: U[a,b] has leading
    monomial x^a y^b with coefficient 1.
    """
    rem = Poly2(dict(f.coeffs))
    out: dict[HWLabel, int] = {}
    while rem:
        a, b = rem.leading_monomial()
        u = upoly(a, b)
        assert u.leading_monomial() == (a, b) and u.coeffs[(a, b)] == 1
        c = rem.coeffs[(a, b)]
        out[(a, b)] = out.get((a, b), 0) + c
        rem = rem - u.scale(c)
        assert (a, b) not in rem.coeffs
    return {m: c for m, c in out.items() if c}


def tensor(a: HWLabel, b: HWLabel) -> dict[HWLabel, int]:
    """Clebsch-Gordan multiplicities of the simples in L(a) (x) L(b)."""
    a = _check_label(a)
    b = _check_label(b)
    return to_ubasis(upoly(*a) * upoly(*b))


def tensor_with_f(l: HWLabel) -> dict[HWLabel, int]:
    """Decomposition of F (x) L(l): shifts by (1,0), (-1,1), (0,-1), dropping negatives."""
    i, j = _check_label(l)
    cands = [(i + 1, j), (i - 1, j + 1), (i, j - 1)]
    return {c: 1 for c in cands if c[0] >= 0 and c[1] >= 0}


def tensor_with_g(l: HWLabel) -> dict[HWLabel, int]:
    """Decomposition of G (x) L(l): shifts by (0,1), (1,-1), (-1,0), dropping negatives."""
    i, j = _check_label(l)
    cands = [(i, j + 1), (i + 1, j - 1), (i - 1, j)]
    return {c: 1 for c in cands if c[0] >= 0 and c[1] >= 0}


def dim(l: HWLabel) -> int:
    """Dimension (i+1)(j+1)(i+j+2)/2 of the simple with highest weight (i, j)."""
    i, j = _check_label(l)
    n = (i + 1) * (j + 1) * (i + j + 2)
    assert n % 2 == 0
    return n // 2


def dim_triangle_row(n: int) -> list[int]:
    """Row n of the dimension triangle: dims of labels (n,0), (n-1,1), ..., (0,n)."""
    return [dim((n - k, k)) for k in range(n + 1)]


def kostant_p(a: int, b: int) -> int:
    """Number of ways to write a*alpha + b*beta with non-negative alpha/beta/(alpha+beta)."""
    if a < 0 or b < 0:
        raise ValueError("arguments must be non-negative")
    return min(a, b) + 1


def verma_mult(a: int, b: int) -> int:
    """Weight multiplicity min(a+1, b+1) of a Verma module at depth a*alpha + b*beta."""
    if a < 0 or b < 0:
        raise ValueError("arguments must be non-negative")
    return min(a + 1, b + 1)


def _apply_f_grid(arr: np.ndarray) -> np.ndarray:
    out = np.zeros_like(arr)
    out[1:, :] += arr[:-1, :]
    out[:-1, 1:] += arr[1:, :-1]
    out[:, :-1] += arr[:, 1:]
    return out


def _apply_g_grid(arr: np.ndarray) -> np.ndarray:
    out = np.zeros_like(arr)
    out[:, 1:] += arr[:, :-1]
    out[1:, :-1] += arr[:-1, 1:]
    out[:-1, :] += arr[1:, :]
    return out


def tensor_table(a: HWLabel, limit: int) -> dict[HWLabel, dict[HWLabel, int]]:
    """Tensor decompositions L(a) (x) L(b) for every b with entries <= limit.

    Runs the Clebsch-Gordan recursion at the operator level on integer grids; one call
    costs roughly as much as a single tensor() product, so full sweeps stay cheap.
    Agrees with tensor() entry for entry (asserted in the test suite).
    """
    i0, j0 = _check_label(a)
    head = 2 * limit  # the recursion walks labels up to (k-2, l+1) chains past the limit
    n = max(i0, j0) + head + 2
    base = np.zeros((n, n), dtype=np.int64)
    base[i0, j0] = 1
    grids: dict[HWLabel, np.ndarray] = {(0, 0): base}
    for d in range(1, 2 * limit + 1):
        for k in range(d + 1):
            l = d - k
            if k > head or l > head:
                continue
            if k >= 1:
                t = _apply_f_grid(grids[(k - 1, l)])
                if k >= 2:
                    t -= grids[(k - 2, l + 1)]
                if l >= 1:
                    t -= grids[(k - 1, l - 1)]
            else:
                t = _apply_g_grid(grids[(0, l - 1)])
                if l >= 2:
                    t -= grids[(1, l - 2)]
            grids[(k, l)] = t
    out: dict[HWLabel, dict[HWLabel, int]] = {}
    for k in range(limit + 1):
        for l in range(limit + 1):
            g = grids[(k, l)]
            idx = np.argwhere(g)
            out[(k, l)] = {(int(i), int(j)): int(g[i, j]) for i, j in idx}
    return out
