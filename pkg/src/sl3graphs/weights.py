"""Exact weights for sl3: coset classes, the shifted Weyl-group action, and region taxonomy.

A weight is identified with the integer pair (p, q) = (lambda(h1), lambda(h2)) of its
offset from a formal coset base point.  Non-integral cosets carry a class tag instead of
a materialized base: every predicate used downstream (wall membership, orbit size,
region) depends only on the integer offsets, so no floating point ever appears.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .categories import CategoryId

IntPair = tuple[int, int]

# Simple roots and their half-sum in (lambda(h1), lambda(h2)) coordinates.
ALPHA: IntPair = (2, -1)
BETA: IntPair = (-1, 2)
RHO: IntPair = (1, 1)


class OutsideCosetError(ValueError):
    """Raised when a Weyl element does not preserve the weight's coset."""


class CosetClass(str, Enum):
    """Coset of the integral lattice, tagged by its formal base point.

    INTEGRAL has base (0,0); S_WALL, R_WALL, W0_WALL have bases (0,a), (a,0), (a,-a)
    for a non-integral scalar a that is never materialized; THIRD_ONE and THIRD_TWO
    have bases (1/3,1/3) and (2/3,2/3); GENERIC is any other coset.
    """

    INTEGRAL = "integral"
    S_WALL = "s"
    R_WALL = "r"
    W0_WALL = "w0"
    THIRD_ONE = "third1"
    THIRD_TWO = "third2"
    GENERIC = "generic"


class WeylElem(str, Enum):
    E = "e"
    S = "s"
    R = "r"
    SR = "sr"
    RS = "rs"
    W0 = "w0"


# Multiplication table for W ~ S3 under the convention [xy] = [x][y] (apply y first),
# which makes the linear matrices [s], [r], [sr] compose as [sr] = [s][r].
_E, _S, _R, _SR, _RS, _W0 = (
    WeylElem.E, WeylElem.S, WeylElem.R, WeylElem.SR, WeylElem.RS, WeylElem.W0,
)
_MULT = {
    (_E, _E): _E, (_E, _S): _S, (_E, _R): _R, (_E, _SR): _SR, (_E, _RS): _RS, (_E, _W0): _W0,
    (_S, _E): _S, (_S, _S): _E, (_S, _R): _SR, (_S, _SR): _R, (_S, _RS): _W0, (_S, _W0): _RS,
    (_R, _E): _R, (_R, _S): _RS, (_R, _R): _E, (_R, _SR): _W0, (_R, _RS): _S, (_R, _W0): _SR,
    (_SR, _E): _SR, (_SR, _S): _W0, (_SR, _R): _S, (_SR, _SR): _RS, (_SR, _RS): _E, (_SR, _W0): _R,
    (_RS, _E): _RS, (_RS, _S): _R, (_RS, _R): _W0, (_RS, _SR): _E, (_RS, _RS): _SR, (_RS, _W0): _S,
    (_W0, _E): _W0, (_W0, _S): _SR, (_W0, _R): _RS, (_W0, _SR): _S, (_W0, _RS): _R, (_W0, _W0): _E,
}

_INVERSE = {_E: _E, _S: _S, _R: _R, _SR: _RS, _RS: _SR, _W0: _W0}

# Linear parts in the standard basis: columns are images of (1,0), (0,1).
LINEAR_PART: dict[WeylElem, tuple[IntPair, IntPair]] = {
    _E: ((1, 0), (0, 1)),
    _S: ((-1, 1), (0, 1)),
    _R: ((1, 0), (1, -1)),
    _SR: ((-1, 1), (-1, 0)),
    _RS: ((0, -1), (1, -1)),
    _W0: ((0, -1), (-1, 0)),
}

ALLOWED: dict[CosetClass, frozenset[WeylElem]] = {
    CosetClass.INTEGRAL: frozenset(WeylElem),
    CosetClass.S_WALL: frozenset({_E, _S}),
    CosetClass.R_WALL: frozenset({_E, _R}),
    CosetClass.W0_WALL: frozenset({_E, _W0}),
    CosetClass.THIRD_ONE: frozenset({_E, _SR, _RS}),
    CosetClass.THIRD_TWO: frozenset({_E, _SR, _RS}),
    CosetClass.GENERIC: frozenset({_E}),
}


def multiply(a: WeylElem, b: WeylElem) -> WeylElem:
    """Product ab (b acts first)."""
    return _MULT[(a, b)]


def inverse(a: WeylElem) -> WeylElem:
    return _INVERSE[a]


@dataclass(frozen=True, order=True)
class Weight:
    """A weight base(cls) + off; equality and hashing are exact on (cls, off)."""

    cls: CosetClass
    off: IntPair

    def __repr__(self) -> str:
        return f"Weight({self.cls.value}, {self.off})"


def integral(p: int, q: int) -> Weight:
    return Weight(CosetClass.INTEGRAL, (p, q))


# Dot action on full coordinates, valid on the integral coset:
#   s.l  = (-l1-2, l1+l2+1)        r.l  = (l1+l2+1, -l2-2)
#   sr.l = (-l1-l2-3, l1)          rs.l = (l2, -l1-l2-3)
#   w0.l = (-l2-2, -l1-2)
def _dot_integral(w: WeylElem, p: int, q: int) -> IntPair:
    if w is _E:
        return (p, q)
    if w is _S:
        return (-p - 2, p + q + 1)
    if w is _R:
        return (p + q + 1, -q - 2)
    if w is _SR:
        return (-p - q - 3, p)
    if w is _RS:
        return (q, -p - q - 3)
    return (-q - 2, -p - 2)


# Offset maps for the non-integral classes, derived by applying the affine dot maps to
# base + offset and reading off the integral displacement (the base is preserved).
def _dot_offset(cls: CosetClass, w: WeylElem, p: int, q: int) -> IntPair:
    if w is _E:
        return (p, q)
    if cls is CosetClass.S_WALL:  # base (0,a), w = s
        return (-p - 2, p + q + 1)
    if cls is CosetClass.R_WALL:  # base (a,0), w = r
        return (p + q + 1, -q - 2)
    if cls is CosetClass.W0_WALL:  # base (a,-a), w = w0
        return (-q - 2, -p - 2)
    shift = 4 if cls is CosetClass.THIRD_ONE else 5
    if w is _SR:
        return (-p - q - shift, p)
    return (q, -p - q - shift)  # w = rs


def dot(w: WeylElem, lam: Weight) -> Weight:
    """Shifted action w.lam = w(lam + rho) - rho, restricted to lam's coset."""
    if w not in ALLOWED[lam.cls]:
        raise OutsideCosetError(f"{w.value} does not preserve the coset {lam.cls.value}")
    p, q = lam.off
    if lam.cls is CosetClass.INTEGRAL:
        return Weight(lam.cls, _dot_integral(w, p, q))
    return Weight(lam.cls, _dot_offset(lam.cls, w, p, q))


def dot_orbit(lam: Weight) -> frozenset[Weight]:
    """Orbit of lam under all coset-preserving elements."""
    return frozenset(dot(w, lam) for w in ALLOWED[lam.cls])


def stabilizer(lam: Weight) -> frozenset[WeylElem]:
    return frozenset(w for w in ALLOWED[lam.cls] if dot(w, lam) == lam)


def is_singular(lam: Weight) -> bool:
    """True when the dot-orbit is smaller than the coset allows.

    Integral weights are singular on the walls p=-1, q=-1, p+q=-2; each wall coset is
    singular on its own wall; third and generic cosets are always regular.
    """
    p, q = lam.off
    if lam.cls is CosetClass.INTEGRAL:
        return p == -1 or q == -1 or p + q == -2
    if lam.cls is CosetClass.S_WALL:
        return p == -1
    if lam.cls is CosetClass.R_WALL:
        return q == -1
    if lam.cls is CosetClass.W0_WALL:
        return p + q == -2
    return False


class Region(str, Enum):
    TOP = "top"
    UPPER_MIDDLE = "upper_middle"
    LOWER_MIDDLE = "lower_middle"
    BOTTOM = "bottom"
    X1 = "x1"
    X2 = "x2"
    X3 = "x3"
    X4 = "x4"
    X5 = "x5"
    X6 = "x6"
    THIRD_CELL = "third_cell"
    GENERIC_CELL = "generic_cell"


def region(lam: Weight) -> Region:
    """The unique region of lam's class containing it."""
    p, q = lam.off
    cls = lam.cls
    if cls is CosetClass.INTEGRAL:
        if p >= 0 and q >= 0:
            return Region.TOP
        if p <= -1 and q >= 0:
            return Region.UPPER_MIDDLE
        if p >= 0:
            return Region.LOWER_MIDDLE
        return Region.BOTTOM
    if cls is CosetClass.S_WALL:
        return Region.X1 if p >= 0 else Region.X2
    if cls is CosetClass.R_WALL:
        return Region.X3 if q >= 0 else Region.X4
    if cls is CosetClass.W0_WALL:
        return Region.X5 if p + q >= 0 else Region.X6
    if cls in (CosetClass.THIRD_ONE, CosetClass.THIRD_TWO):
        return Region.THIRD_CELL
    return Region.GENERIC_CELL


def category_of_simple(lam: Weight, whittaker: bool = False) -> list[CategoryId]:
    """Ordered multiset of transitive subquotient families attached to the simple at lam.

    The list runs from the smallest subcategory in the filtration to the final quotient.
    With whittaker=True the Third cosets index simple Whittaker modules instead of
    highest-weight modules and contribute their orbit-quotient family.
    """
    p, q = lam.off
    reg = region(lam)
    singular = is_singular(lam)
    if reg is Region.TOP:
        return [CategoryId.REGULAR]
    if reg is Region.UPPER_MIDDLE:
        return [CategoryId.N1] if singular else [CategoryId.N1, CategoryId.REGULAR]
    if reg is Region.LOWER_MIDDLE:
        return [CategoryId.N2] if singular else [CategoryId.N2, CategoryId.REGULAR]
    if reg is Region.BOTTOM:
        if (p, q) == (-1, -1):
            return [CategoryId.N3]
        if q == -1:
            return [CategoryId.N3, CategoryId.N1]
        if p == -1:
            return [CategoryId.N3, CategoryId.N2]
        return [CategoryId.N3, CategoryId.N2, CategoryId.N1, CategoryId.REGULAR]
    if reg is Region.X1:
        return [CategoryId.M1]
    if reg is Region.X2:
        return [CategoryId.M2] if p == -1 else [CategoryId.M2, CategoryId.M1]
    if reg is Region.X3:
        return [CategoryId.M3]
    if reg is Region.X4:
        return [CategoryId.M4] if q == -1 else [CategoryId.M4, CategoryId.M3]
    if reg is Region.X5:
        return [CategoryId.M5]
    if reg is Region.X6:
        return [CategoryId.M6] if p + q == -1 else [CategoryId.M6, CategoryId.M5]
    if reg is Region.THIRD_CELL:
        if whittaker:
            one = lam.cls is CosetClass.THIRD_ONE
            return [CategoryId.WHITTAKER1 if one else CategoryId.WHITTAKER2]
        return [CategoryId.GENERIC_K]
    return [CategoryId.GENERIC_K]


def weight_to_json(lam: Weight) -> dict:
    return {"class": lam.cls.value, "off": [lam.off[0], lam.off[1]]}


def weight_from_json(obj: dict) -> Weight:
    p, q = obj["off"]
    return Weight(CosetClass(obj["class"]), (int(p), int(q)))


def third_orbit(off: IntPair, cls: CosetClass) -> frozenset[IntPair]:
    """Offset orbit of a Third-coset weight under {e, sr, rs}."""
    lam = Weight(cls, off)
    return frozenset(w.off for w in dot_orbit(lam))
