import itertools
import random
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from srhk.errors import NotAFace
from srhk.homology import (boundary_matrix, cm_report, is_cohen_macaulay, link, reduced_betti,
                           reduced_betti_numbers, reduced_euler_characteristic, smith_normal_form,
                           torsion_primes)
from srhk.simplicial import cycle_complex, from_facets, path_complex, rp2, simplex

from conftest import small_corpus


def determinantal_divisors(M):
    """gcd of all k x k minors, k = 1..rank (independent SNF oracle)."""
    import sympy

    m, n = len(M), len(M[0])
    out = []
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(n), k):
                g = gcd(g, int(sympy.Matrix([[M[i][j] for j in cols] for i in rows]).det()))
        if g == 0:
            break
        out.append(g)
    return out


class TestSmithNormalForm:
    def test_diag(self):
        assert smith_normal_form([[2, 0], [0, 3]]).factors == (1, 6)

    def test_zero(self):
        snf = smith_normal_form([[0, 0], [0, 0], [0, 0]])
        assert snf.factors == () and snf.rank == 0

    def test_identity(self):
        assert smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).factors == (1, 1, 1)

    def test_known(self):
        M = [[12, 6, 4, 8], [3, 9, 6, 12], [2, 16, 14, 28], [20, 10, 10, 20]]
        assert smith_normal_form(M).factors == (1, 10, 30)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(1, 4).flatmap(lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=m, max_size=m))))
    def test_against_determinantal_divisors(self, M):
        factors = smith_normal_form(M).factors
        dd = determinantal_divisors(M)
        assert len(factors) == len(dd)
        prod = 1
        for f, dk in zip(factors, dd):
            prod *= f
            assert prod == dk
        for a, b in zip(factors, factors[1:]):
            assert b % a == 0


class TestBoundary:
    @pytest.mark.parametrize("name, K", small_corpus())
    def test_boundary_squares_to_zero(self, name, K):
        for i in range(1, K.dim + 1):
            A = boundary_matrix(K, i - 1)
            B = boundary_matrix(K, i)
            for row in A:
                for c in range(len(B[0])):
                    assert sum(row[k] * B[k][c] for k in range(len(B))) == 0


class TestBetti:
    def test_rp2(self):
        K = rp2()
        assert reduced_betti(K, 1, 0) == 0
        assert reduced_betti(K, 1, 2) == 1
        assert reduced_betti(K, 2, 2) == 1
        assert reduced_betti(K, 2, 3) == 0
        assert torsion_primes(K) == [2]

    @pytest.mark.parametrize("r", [3, 4, 7])
    @pytest.mark.parametrize("p", [0, 2, 3])
    def test_circle(self, r, p):
        assert reduced_betti(cycle_complex(r), 1, p) == 1
        assert reduced_betti(cycle_complex(r), 0, p) == 0

    @pytest.mark.parametrize("r", range(1, 6))
    def test_simplex_acyclic(self, r):
        assert set(reduced_betti_numbers(simplex(r), 2)) == {0}
        assert set(reduced_betti_numbers(simplex(r), 0)) == {0}

    @pytest.mark.parametrize("name, K", small_corpus())
    def test_euler_characteristic(self, name, K):
        betti = reduced_betti_numbers(K, 0)
        assert sum((-1) ** i * b for i, b in enumerate(betti, start=-1)) == reduced_euler_characteristic(K)

    @pytest.mark.parametrize("name, K", small_corpus())
    def test_relabel_invariance(self, name, K):
        rng = random.Random(name)
        perm = list(range(K.r))
        rng.shuffle(perm)
        L = K.relabel(perm)
        for p in (0, 2):
            assert reduced_betti_numbers(L, p) == reduced_betti_numbers(K, p)
        assert is_cohen_macaulay(L) == is_cohen_macaulay(K)


class TestLink:
    def test_empty_face(self):
        assert link(rp2(), 0) == rp2()

    def test_triangle_boundary_vertex(self):
        L = link(cycle_complex(3), ["x1"])
        assert sorted(L.facet_labels()) == [["x2"], ["x3"]]

    def test_path_interior_vertex(self):
        L = link(path_complex(4), ["x2"])
        assert sorted(L.facet_labels()) == [["x1"], ["x3"]]

    def test_facet_link_is_empty_face(self):
        L = link(rp2(), ["a", "b", "e"])
        assert L.dim == -1 and L.f_vector == (1,)

    def test_not_a_face(self):
        with pytest.raises(NotAFace):
            link(path_complex(4), ["x1", "x3"])


class TestReisner:
    def test_rp2_characteristic_dichotomy(self):
        assert is_cohen_macaulay(rp2(), 0)
        assert is_cohen_macaulay(rp2(), 3)
        assert not is_cohen_macaulay(rp2(), 2)

    @pytest.mark.parametrize("p", [0, 2, 5])
    def test_two_edges_never_cm(self, ex41, p):
        assert not is_cohen_macaulay(ex41, p)

    def test_triangle_with_tail(self, ex43):
        assert is_cohen_macaulay(ex43)

    def test_edge_and_triangle_not_pure(self, ex42):
        assert not is_cohen_macaulay(ex42)

    def test_paths_and_circles(self):
        assert all(is_cohen_macaulay(path_complex(r)) for r in range(2, 7))
        assert all(is_cohen_macaulay(cycle_complex(r)) for r in range(3, 7))

    def test_disconnected_graph(self):
        K = from_facets("abcd", [["a", "b"], ["c", "d"]])
        assert not is_cohen_macaulay(K)

    def test_report_lists_torsion(self):
        rep = cm_report(rp2(), 2)
        assert rep == {"char": 2, "cohen_macaulay": False, "torsion_primes": [2]}
