import random
from collections import Counter

import pytest

from srhk.errors import BudgetExceeded, InvalidQuery
from srhk.oracle import (_tallies, face_monomials, in_frobenius_product, oracle_conca,
                         oracle_hilbert_samuel, oracle_hk_rees, oracle_sr_colength, rees_layer)
from srhk.simplicial import cycle_complex, rp2, simplex

from conftest import brute_monomials, small_corpus


def is_face_monomial(K, a):
    support = 0
    for i, e in enumerate(a):
        if e:
            support |= 1 << i
    return support in K.faces


def brute_colength(K, s, n):
    cap = max(s + n - 1, K.d * (s - 1))
    return sum(1 for a in brute_monomials(K.r, cap)
               if is_face_monomial(K, a) and not in_frobenius_product(a, s, n))


class TestEnumeration:
    @pytest.mark.parametrize("name, K", small_corpus()[:12])
    def test_tallies_match_streamed_monomials(self, name, K):
        s, cap = 3, 7
        total, small = _tallies(K, s, cap)
        for deg in range(cap + 1):
            mons = list(face_monomials(K, deg))
            assert len(mons) == len(set(mons)) == total[deg]
            assert sum(1 for a in mons if max(a, default=0) < s) == small[deg]

    def test_streamed_monomials_are_face_supported(self):
        K = rp2()
        for a in face_monomials(K, 4):
            assert sum(a) == 4 and is_face_monomial(K, a)

    def test_degree_layers_of_rp2(self):
        assert Counter(sum(a) for d in range(4) for a in face_monomials(rp2(), d)) == {0: 1, 1: 6, 2: 21, 3: 46}

    @pytest.mark.parametrize("name, K", small_corpus()[:8])
    def test_dp_against_full_enumeration(self, name, K):
        for s in (1, 2, 3):
            for n in (0, 1, 2, 4):
                assert oracle_sr_colength(K, s, n) == brute_colength(K, s, n)


class TestValues:
    def test_two_edges_colength(self, ex41):
        # degrees 0, 1, 2 survive: 1 + 4 + 6
        assert oracle_sr_colength(ex41, 2, 1) == 11 == 2 * (4 + 1 + 1) - 1

    def test_simplex(self):
        assert oracle_sr_colength(simplex(2), 2, 1) == 6

    def test_hilbert_samuel(self, ex43):
        assert oracle_hilbert_samuel(ex43, 3) == 13
        assert oracle_hilbert_samuel(ex43, 0) == 0

    def test_conca(self):
        assert oracle_conca(rp2(), 2) == 32
        assert oracle_conca(rp2(), 3) == 153

    def test_hk_rees(self, ex41, ex43):
        assert oracle_hk_rees(ex43, 2) == 25
        assert oracle_hk_rees(ex41, 3) == 69
        assert oracle_hk_rees(rp2(), 2) == 104

    def test_hk_at_one_is_one(self):
        for name, K in small_corpus():
            assert oracle_hk_rees(K, 1) == 1

    def test_rees_layers_vanish(self):
        K = cycle_complex(4)
        s = 3
        assert rees_layer(K, s, 0) == oracle_conca(K, s)
        n = 0
        while rees_layer(K, s, n):
            n += 1
        assert n <= (K.d + 1) * s
        assert all(rees_layer(K, s, m) == 0 for m in range(n, n + 5))


class TestInvariance:
    @pytest.mark.parametrize("name, K", small_corpus())
    def test_relabel(self, name, K):
        rng = random.Random(name)
        perm = list(range(K.r))
        rng.shuffle(perm)
        L = K.relabel(perm)
        for s in (1, 2, 3):
            assert oracle_conca(L, s) == oracle_conca(K, s)
            assert oracle_sr_colength(L, s, 2) == oracle_sr_colength(K, s, 2)
        assert oracle_hk_rees(L, 2) == oracle_hk_rees(K, 2)


class TestGuards:
    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            oracle_sr_colength(rp2(), 50, 50, budget=1000)

    def test_bad_query(self):
        with pytest.raises(InvalidQuery):
            oracle_sr_colength(rp2(), 0, 1)
        with pytest.raises(InvalidQuery):
            oracle_hk_rees(rp2(), 0)
        with pytest.raises(InvalidQuery):
            oracle_hilbert_samuel(rp2(), -1)
