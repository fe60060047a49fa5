"""Finite simplicial complexes, their face numbers, and the graphs whose
edge ideals are Stanley-Reisner ideals.

Vertices carry string labels on the outside and dense integer indices on
the inside; a face is stored as a bit mask over those indices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Iterable, Iterator, Sequence

import networkx as nx

from .errors import ComplexError, DuplicateLabel, EmptyComplex, GhostVertex


def iter_submasks(mask: int) -> Iterator[int]:
    """Yield every submask of ``mask``, ``mask`` itself first and 0 last."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def mask_indices(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


class SimplicialComplex:
    """A simplicial complex given by its facets.

    Use :func:`from_facets` to build one from labels. Instances are
    immutable; derived data is computed lazily and cached.
    """

    def __init__(self, vertices: Sequence[str], facets: Iterable[int]):
        self._vertices = tuple(vertices)
        facets = list(dict.fromkeys(facets))
        if not facets:
            raise EmptyComplex("a simplicial complex needs at least one facet")
        full = (1 << len(self._vertices)) - 1
        for f in facets:
            if f & ~full:
                raise ComplexError(f"facet mask {f:#b} refers to unknown vertices")
        maximal = [f for f in facets if not any(f != g and f & g == f for g in facets)]
        covered = 0
        for f in maximal:
            covered |= f
        if covered != full:
            missing = mask_indices(full & ~covered)[0]
            raise GhostVertex(self._vertices[missing])
        self._facets = tuple(maximal)
        self.dropped = tuple(f for f in facets if f not in maximal)

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def facets(self) -> tuple[int, ...]:
        """Facet bit masks, in input order with non-maximal ones removed."""
        return self._facets

    @property
    def r(self) -> int:
        """Number of vertices."""
        return len(self._vertices)

    @cached_property
    def d(self) -> int:
        """Krull dimension of the face ring, one more than the complex dimension."""
        return max(f.bit_count() for f in self._facets)

    @property
    def dim(self) -> int:
        return self.d - 1

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self._vertices)}

    def mask(self, labels: Iterable[str]) -> int:
        m = 0
        for v in labels:
            try:
                m |= 1 << self.index[v]
            except KeyError:
                raise ComplexError(f"unknown vertex {v!r}") from None
        return m

    def labels(self, mask: int) -> frozenset[str]:
        return frozenset(self._vertices[i] for i in mask_indices(mask))

    def facet_labels(self) -> list[list[str]]:
        """Facets as sorted-by-index label lists (the form written to files)."""
        return [[self._vertices[i] for i in mask_indices(f)] for f in self._facets]

    @cached_property
    def faces(self) -> frozenset[int]:
        """Every face, the empty face included, as bit masks."""
        seen: set[int] = set()
        for f in self._facets:
            seen.update(iter_submasks(f))
        return frozenset(seen)

    def faces_of_dim(self, i: int) -> list[int]:
        """Faces of dimension ``i`` in a canonical (numeric mask) order."""
        return sorted(m for m in self.faces if m.bit_count() == i + 1)

    def __contains__(self, face) -> bool:
        if not isinstance(face, int):
            face = self.mask(face)
        return any(face & f == face for f in self._facets)

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        """``(f_{-1}, f_0, ..., f_{d-1})``."""
        counts = [0] * (self.d + 1)
        for m in self.faces:
            counts[m.bit_count()] += 1
        return tuple(counts)

    @cached_property
    def h_vector(self) -> tuple[int, ...]:
        return h_vector(self.f_vector, self.d)

    @cached_property
    def fh(self) -> "FHData":
        f = self.f_vector
        h = self.h_vector
        return FHData(f=f, h=h, d=self.d, e=f[-1], h_at_1=sum(h))

    def relabel(self, permutation: Sequence[int]) -> "SimplicialComplex":
        """Return the isomorphic complex whose vertex ``i`` becomes vertex ``permutation[i]``."""
        verts = [None] * self.r
        for i, j in enumerate(permutation):
            verts[j] = self._vertices[i]
        facets = []
        for f in self._facets:
            facets.append(sum(1 << permutation[i] for i in mask_indices(f)))
        return SimplicialComplex(verts, facets)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._vertices == other._vertices and set(self._facets) == set(other._facets)

    def __hash__(self):
        return hash((self._vertices, frozenset(self._facets)))

    def __repr__(self):
        body = ", ".join("".join(f) if all(len(v) == 1 for v in f) else "{" + ",".join(f) + "}"
                         for f in self.facet_labels())
        return f"SimplicialComplex([{body}])"


@dataclass(frozen=True)
class FHData:
    f: tuple[int, ...]
    h: tuple[int, ...]
    d: int
    e: int
    h_at_1: int


def from_facets(vertex_labels: Sequence[str], facet_lists: Iterable[Iterable[str]]) -> SimplicialComplex:
    """Build a complex from labelled facets.

    Non-maximal and repeated facets are dropped. Every label in
    ``vertex_labels`` must lie on some facet.

    >>> K = from_facets(["x1", "x2", "x3"], [["x1", "x2"], ["x1"], ["x2", "x3"]])
    >>> K.facet_labels()
    [['x1', 'x2'], ['x2', 'x3']]
    """
    labels = [str(v) for v in vertex_labels]
    index: dict[str, int] = {}
    for v in labels:
        if v in index:
            raise DuplicateLabel(v)
        index[v] = len(index)
    masks = []
    for facet in facet_lists:
        m = 0
        for v in facet:
            v = str(v)
            if v not in index:
                raise ComplexError(f"facet uses undeclared vertex {v!r}")
            m |= 1 << index[v]
        masks.append(m)
    if not masks:
        raise EmptyComplex("a simplicial complex needs at least one facet")
    if not labels:
        raise EmptyComplex("a simplicial complex needs at least one vertex")
    return SimplicialComplex(labels, masks)


def f_vector(K: SimplicialComplex) -> tuple[int, ...]:
    return K.f_vector


def h_vector(f: Sequence[int], d: int | None = None) -> tuple[int, ...]:
    """h-vector from an f-vector ``(1, f_0, ..., f_{d-1})``."""
    if d is None:
        d = len(f) - 1
    if len(f) != d + 1 or f[0] != 1:
        raise ValueError("f must be (1, f_0, ..., f_{d-1}) with d+1 entries")
    return tuple(
        sum((-1) ** (j - i) * comb(d - i, j - i) * f[i] for i in range(j + 1))
        for j in range(d + 1)
    )


def minimal_primes(K: SimplicialComplex) -> list[frozenset[str]]:
    """Generators of the minimal primes of the Stanley-Reisner ideal.

    One per facet: the variables *not* on that facet. The full simplex
    yields a single empty generating set (the zero ideal).
    """
    full = (1 << K.r) - 1
    return [K.labels(full & ~f) for f in K.facets]


# --- graphs -----------------------------------------------------------------


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            dup = next(v for v in self.vertices if self.vertices.count(v) > 1)
            raise DuplicateLabel(dup)
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < len(self.vertices) and 0 <= v < len(self.vertices)):
                raise ComplexError(f"edge ({u}, {v}) out of range")
            if u == v:
                raise ComplexError(f"loop at vertex {self.vertices[u]!r}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ComplexError(f"repeated edge {self.vertices[u]!r}-{self.vertices[v]!r}")
            seen.add(key)

    @classmethod
    def from_edges(cls, vertices: Sequence[str], edges: Iterable[tuple[str, str]]) -> "Graph":
        vertices = tuple(str(v) for v in vertices)
        idx = {v: i for i, v in enumerate(vertices)}
        return cls(vertices, tuple((idx[a], idx[b]) for a, b in edges))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(len(self.vertices)))
        g.add_edges_from(self.edges)
        return g


def independence_complex(G: Graph) -> SimplicialComplex:
    """Complex of independent sets; its Stanley-Reisner ideal is the edge ideal of ``G``."""
    if not G.vertices:
        raise EmptyComplex("graph has no vertices")
    comp = nx.complement(G.to_networkx())
    facets = sorted(sum(1 << i for i in clique) for clique in nx.find_cliques(comp))
    return SimplicialComplex(G.vertices, facets)


def minimal_vertex_covers(G: Graph) -> list[frozenset[str]]:
    """All inclusion-minimal vertex covers, by branching on uncovered edges."""
    edges = [(1 << u, 1 << v) for u, v in G.edges]
    found: set[int] = set()

    def branch(cover: int) -> None:
        for a, b in edges:
            if not (cover & a or cover & b):
                branch(cover | a)
                branch(cover | b)
                return
        found.add(cover)

    branch(0)
    minimal = [c for c in found if not any(o != c and o & c == o for o in found)]
    return [frozenset(G.vertices[i] for i in mask_indices(c)) for c in sorted(minimal)]


# --- generators ---------------------------------------------------------------


def simplex(r: int) -> SimplicialComplex:
    """The full simplex on ``x1..xr``; its face ring is a polynomial ring."""
    if r < 1:
        raise ComplexError("simplex needs r >= 1")
    return SimplicialComplex([f"x{i}" for i in range(1, r + 1)], [(1 << r) - 1])


def path_complex(r: int) -> SimplicialComplex:
    """The path ``x1 - x2 - ... - xr`` as a 1-dimensional complex."""
    if r < 2:
        raise ComplexError("path needs r >= 2")
    return SimplicialComplex([f"x{i}" for i in range(1, r + 1)], [3 << i for i in range(r - 1)])


def cycle_complex(r: int) -> SimplicialComplex:
    """The boundary of an r-gon, a triangulated circle."""
    if r < 3:
        raise ComplexError("cycle needs r >= 3")
    facets = [3 << i for i in range(r - 1)] + [1 | 1 << (r - 1)]
    return SimplicialComplex([f"x{i}" for i in range(1, r + 1)], facets)


def cycle_graph(r: int) -> Graph:
    if r < 3:
        raise ComplexError("cycle needs r >= 3")
    return Graph(tuple(f"x{i}" for i in range(1, r + 1)),
                 tuple((i, (i + 1) % r) for i in range(r)))


def complete_bipartite(alpha: int, beta: int) -> Graph:
    """``K_{alpha,beta}`` on parts ``x1..x_alpha`` and ``y1..y_beta``."""
    if not 1 <= alpha <= beta:
        raise ComplexError("complete_bipartite needs 1 <= alpha <= beta")
    verts = tuple([f"x{i}" for i in range(1, alpha + 1)] + [f"y{j}" for j in range(1, beta + 1)])
    edges = tuple((i, alpha + j) for i in range(alpha) for j in range(beta))
    return Graph(verts, edges)


RP2_FACETS = ("abe", "ade", "acd", "bcd", "bdf", "abf", "acf", "cef", "bce", "def")


def rp2() -> SimplicialComplex:
    """The 6-vertex triangulation of the real projective plane."""
    return from_facets("abcdef", [list(t) for t in RP2_FACETS])


def complete_bipartite_complex(alpha: int, beta: int) -> SimplicialComplex:
    return independence_complex(complete_bipartite(alpha, beta))


def all_complexes_on(r: int) -> Iterator[SimplicialComplex]:
    """Every complex on ``x1..xr`` with no ghost vertices (exponential; r <= 4)."""
    verts = [f"x{i}" for i in range(1, r + 1)]
    nonempty = range(1, 1 << r)
    for k in range(1, 1 << r):
        for facets in itertools.combinations(nonempty, k):
            if any(a & b in (a, b) for a, b in itertools.combinations(facets, 2)):
                continue
            cover = 0
            for f in facets:
                cover |= f
            if cover == (1 << r) - 1:
                yield SimplicialComplex(verts, facets)
