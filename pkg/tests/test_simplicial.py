import itertools
import random
from math import comb

import pytest

from srhk.errors import DuplicateLabel, EmptyComplex, GhostVertex
from srhk.simplicial import (Graph, complete_bipartite, complete_bipartite_complex, cycle_graph,
                             from_facets, h_vector, independence_complex, minimal_primes,
                             minimal_vertex_covers, path_complex, rp2, simplex)

from conftest import small_corpus


def labels(*groups):
    return {frozenset(g.split()) for g in groups}


class TestConstruction:
    def test_two_edges(self, ex41):
        assert ex41.dim == 1 and ex41.d == 2
        assert len(ex41.facets) == 2

    def test_point(self):
        K = from_facets(["v"], [["v"]])
        assert K.dim == 0 and K.f_vector == (1, 1)

    def test_non_maximal_facet_dropped(self):
        K = from_facets(["x1", "x2", "x3"], [["x1", "x2"], ["x1"], ["x2", "x3"]])
        assert K.facet_labels() == [["x1", "x2"], ["x2", "x3"]]
        assert [sorted(K.labels(m)) for m in K.dropped] == [["x1"]]

    def test_duplicates_collapse(self):
        K = from_facets("abc", [["a", "b"], ["b", "a"], ["c"]])
        assert len(K.facets) == 2

    @pytest.mark.parametrize("verts, facets, exc", [
        (["a"], [], EmptyComplex),
        (["a", "b"], [["a"]], GhostVertex),
        (["a", "a"], [["a"]], DuplicateLabel),
    ])
    def test_rejects(self, verts, facets, exc):
        with pytest.raises(exc):
            from_facets(verts, facets)

    def test_ghost_vertex_names_label(self):
        with pytest.raises(GhostVertex) as info:
            from_facets(["a", "b", "c"], [["a", "b"]])
        assert info.value.label == "c"


class TestFaceNumbers:
    @pytest.mark.parametrize("K, f", [
        (from_facets(["x1", "x2", "x3", "x4"], [["x1", "x2"], ["x3", "x4"]]), (1, 4, 2)),
        (from_facets(["x1", "x2", "x3", "x4"],
                     [["x1", "x2"], ["x2", "x3"], ["x2", "x4"], ["x3", "x4"]]), (1, 4, 4)),
        (rp2(), (1, 6, 15, 10)),
        (path_complex(4), (1, 4, 3)),
    ])
    def test_f_vector(self, K, f):
        assert K.f_vector == f

    @pytest.mark.parametrize("f, h", [
        ((1, 4, 2), (1, 2, -1)),
        ((1, 6, 15, 10), (1, 3, 6, 0)),
        ((1, 4, 4, 1), (1, 1, -1, 0)),
        ((1, 4, 4), (1, 2, 1)),
    ])
    def test_h_vector(self, f, h):
        assert h_vector(f) == h

    @pytest.mark.parametrize("r", range(3, 10))
    def test_h_vector_path_family(self, r):
        assert h_vector((1, r, r - 1)) == (1, r - 2, 0)

    @pytest.mark.parametrize("r", range(1, 8))
    def test_simplex_f_vector_is_binomial_row(self, r):
        assert simplex(r).f_vector == tuple(comb(r, i) for i in range(r + 1))

    def test_bipartite_f_vector(self):
        # (1, a+b, C(a,2)+C(b,2), ...) for the union of two simplices
        assert complete_bipartite_complex(3, 4).f_vector == (1, 7, 9, 5, 1)

    @pytest.mark.parametrize("name, K", small_corpus())
    def test_h_identities(self, name, K):
        h = K.h_vector
        assert sum(h) == K.f_vector[-1]
        assert h[0] == 1
        assert h[1] == K.r - K.d

    @pytest.mark.parametrize("name, K", small_corpus())
    def test_facets_are_maximal(self, name, K):
        for a, b in itertools.permutations(K.facets, 2):
            assert a & b != a


class TestMinimalPrimes:
    def test_two_edges(self, ex41):
        assert minimal_primes(ex41) == [frozenset({"x3", "x4"}), frozenset({"x1", "x2"})]

    def test_full_simplex_is_zero_ideal(self):
        assert minimal_primes(simplex(4)) == [frozenset()]

    def test_path(self):
        primes = minimal_primes(path_complex(4))
        assert set(primes) == labels("x3 x4", "x1 x4", "x1 x2")


class TestGraphs:
    def test_five_cycle_covers(self):
        covers = minimal_vertex_covers(cycle_graph(5))
        assert set(covers) == labels("x1 x2 x4", "x1 x3 x5", "x1 x3 x4", "x2 x3 x5", "x2 x4 x5")

    def test_five_cycle_independence_complex(self):
        K = independence_complex(cycle_graph(5))
        assert set(minimal_primes(K)) == set(minimal_vertex_covers(cycle_graph(5)))

    def test_bipartite(self):
        K = complete_bipartite_complex(3, 4)
        assert set(map(frozenset, K.facet_labels())) == labels("x1 x2 x3", "y1 y2 y3 y4")
        assert set(minimal_primes(K)) == labels("y1 y2 y3 y4", "x1 x2 x3")
        assert len(complete_bipartite(3, 4).edges) == 12

    def test_edgeless(self):
        G = Graph(("a", "b", "c"), ())
        K = independence_complex(G)
        assert K.facet_labels() == [["a", "b", "c"]]
        assert minimal_vertex_covers(G) == [frozenset()]

    def test_rejects_loops_and_multi_edges(self):
        with pytest.raises(ValueError):
            Graph(("a", "b"), ((0, 0),))
        with pytest.raises(ValueError):
            Graph(("a", "b"), ((0, 1), (1, 0)))

    def test_random_graphs_primes_match_covers(self):
        rng = random.Random(7)
        for _ in range(200):
            n = rng.randint(1, 8)
            pairs = list(itertools.combinations(range(n), 2))
            edges = tuple(p for p in pairs if rng.random() < 0.35)
            G = Graph(tuple(f"v{i}" for i in range(n)), edges)
            assert set(minimal_primes(independence_complex(G))) == set(minimal_vertex_covers(G))


class TestGenerators:
    def test_rp2(self):
        K = rp2()
        assert K.r == 6 and len(K.facets) == 10
        assert all(f.bit_count() == 3 for f in K.facets)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            path_complex(1)
        with pytest.raises(ValueError):
            cycle_graph(2)
        with pytest.raises(ValueError):
            complete_bipartite(3, 2)

    def test_relabel_preserves_invariants(self):
        K = rp2()
        perm = [3, 0, 5, 1, 4, 2]
        L = K.relabel(perm)
        assert L.f_vector == K.f_vector
        assert sorted(L.vertices) == sorted(K.vertices)
        assert {L.labels(f) for f in L.facets} == {K.labels(f) for f in K.facets}
