"""Named complexes with known Hilbert-Kunz data.

The a-invariant data of the non-Cohen-Macaulay entries (``delta`` and the
sign of ``a_d``) come from hand computations with Mayer-Vietoris
sequences; they are not derived here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .hkrees import HKMode, determine_mode
from .simplicial import SimplicialComplex, complete_bipartite_complex, from_facets, path_complex, rp2


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    build: Callable[[], SimplicialComplex]
    delta: int | None = None
    ad_sign: str | None = None
    note: str = ""

    @property
    def complex(self) -> SimplicialComplex:
        return self.build()

    def mode(self, char: int = 0) -> HKMode:
        return determine_mode(self.complex, char, self.delta, self.ad_sign)


def two_edges() -> SimplicialComplex:
    """Two disjoint edges ``x1x2`` and ``x3x4``; depth 1."""
    return from_facets(["x1", "x2", "x3", "x4"], [["x1", "x2"], ["x3", "x4"]])


def edge_and_triangle() -> SimplicialComplex:
    """A filled triangle ``x2x3x4`` with the edge ``x1x2`` attached."""
    return from_facets(["x1", "x2", "x3", "x4"], [["x1", "x2"], ["x2", "x3", "x4"]])


def triangle_with_tail() -> SimplicialComplex:
    """Hollow triangle ``x2x3x4`` with the pendant edge ``x1x2``."""
    return from_facets(["x1", "x2", "x3", "x4"],
                       [["x1", "x2"], ["x2", "x3"], ["x2", "x4"], ["x3", "x4"]])


ENTRIES = {
    "two-edges": CatalogEntry("two-edges", two_edges, delta=2, ad_sign="negative",
                              note="a_1 = 0, a_2 = -2"),
    "edge-triangle": CatalogEntry("edge-triangle", edge_and_triangle, delta=3, ad_sign="negative",
                                  note="a_2 = -1, a_3 = -3"),
    "triangle-tail": CatalogEntry("triangle-tail", triangle_with_tail, note="Cohen-Macaulay, h = (1,2,1)"),
    "path4": CatalogEntry("path4", lambda: path_complex(4), note="Cohen-Macaulay, h = (1,2,0)"),
    "bipartite-3-4": CatalogEntry("bipartite-3-4", lambda: complete_bipartite_complex(3, 4),
                                  delta=4, ad_sign="negative", note="a_1 = 0, a_3 = -3, a_4 = -4"),
    "rp2": CatalogEntry("rp2", rp2, note="Cohen-Macaulay iff char != 2"),
}


def bundled() -> list[CatalogEntry]:
    return list(ENTRIES.values())
