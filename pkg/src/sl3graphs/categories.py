"""Identifiers for the thirteen concrete graph families and their isomorphism classes."""
from __future__ import annotations

from enum import Enum


class CategoryId(str, Enum):
    """The thirteen concrete families of action graphs."""

    REGULAR = "regular"
    N1 = "n1"
    N2 = "n2"
    N3 = "n3"
    M1 = "m1"
    M2 = "m2"
    M3 = "m3"
    M4 = "m4"
    M5 = "m5"
    M6 = "m6"
    GENERIC_K = "generic"
    WHITTAKER1 = "whittaker1"
    WHITTAKER2 = "whittaker2"

    @property
    def iso_class(self) -> str:
        """Name of the catalogued class; the 13 families fall into 8 catalogued classes.

        The catalogue keeps n1 and n2 as separate entries after their source, although
        their graphs are in fact isomorphic (see verify.middle_iso).
        """
        return _ISO_CLASS[self]


_ISO_CLASS = {
    CategoryId.REGULAR: "regular",
    CategoryId.N1: "n1",
    CategoryId.N2: "n2",
    CategoryId.N3: "n3",
    CategoryId.M1: "m-odd",
    CategoryId.M3: "m-odd",
    CategoryId.M5: "m-odd",
    CategoryId.M2: "m-even",
    CategoryId.M4: "m-even",
    CategoryId.M6: "m-even",
    CategoryId.GENERIC_K: "generic",
    CategoryId.WHITTAKER1: "whittaker",
    CategoryId.WHITTAKER2: "whittaker",
}

ISO_CLASSES = tuple(sorted(set(_ISO_CLASS.values())))


class Functor(str, Enum):
    """The two generating translation functors (the 3-dimensional module and its dual)."""

    F = "F"
    G = "G"
