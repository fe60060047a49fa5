"""Brute-force lengths by counting monomials of the face ring.

Nothing here uses a closed form. A monomial ``x^a`` survives in the face
ring iff its support is a face; ``x^a`` lies in ``m^[s] m^n`` iff some
``a_i >= s`` and ``|a| - s >= n``. Counts are taken degree layer by
degree layer: for each face, exponent vectors with that exact support are
tallied by total degree and by whether every exponent is below ``s``.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import BudgetExceeded, InvalidQuery
from .simplicial import SimplicialComplex, mask_indices

DEFAULT_BUDGET = int(os.environ.get("SRHK_ORACLE_BUDGET", 10**8))


@dataclass(frozen=True)
class MonomialBound:
    """Exponents ``< exponent_cap`` (None: unbounded) and total degree ``<= degree_cap``."""

    degree_cap: int
    exponent_cap: int | None = None

    def check(self, K: SimplicialComplex, budget: int = DEFAULT_BUDGET) -> None:
        work = len(K.faces) * (self.degree_cap + 1)
        if work > budget:
            raise BudgetExceeded(f"{work} face-degree cells exceed the budget of {budget}")


def _layer(k: int, cap: int, below: int | None) -> list[int]:
    """Number of vectors in ``[1, below)^k`` (or ``[1, inf)^k``) by total degree ``0..cap``."""
    counts = [0] * (cap + 1)
    counts[0] = 1
    hi = cap if below is None else min(cap, below - 1)
    for _ in range(k):
        nxt = [0] * (cap + 1)
        for deg, c in enumerate(counts):
            if c:
                for e in range(1, min(hi, cap - deg) + 1):
                    nxt[deg + e] += c
        counts = nxt
    return counts


def _tallies(K: SimplicialComplex, s: int, cap: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Per-degree counts of face-supported monomials: (all, all exponents < s)."""
    bucket = 16
    while bucket < cap:
        bucket *= 2
    total, small = _tallies_upto(K, s, bucket)
    return total[: cap + 1], small[: cap + 1]


@lru_cache(maxsize=1024)
def _tallies_upto(K: SimplicialComplex, s: int, cap: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    sizes = Counter(f.bit_count() for f in K.faces)
    total = [0] * (cap + 1)
    small = [0] * (cap + 1)
    for k, mult in sizes.items():
        a = _layer(k, cap, None)
        b = _layer(k, cap, s)
        for deg in range(cap + 1):
            total[deg] += mult * a[deg]
            small[deg] += mult * b[deg]
    return tuple(total), tuple(small)


def face_monomials(K: SimplicialComplex, degree: int) -> Iterator[tuple[int, ...]]:
    """Stream the exponent vectors of degree ``degree`` whose support is a face."""
    for face in sorted(K.faces):
        idx = mask_indices(face)
        k = len(idx)
        if k == 0:
            if degree == 0:
                yield (0,) * K.r
            continue
        if degree < k:
            continue
        for parts in _compositions(degree, k):
            a = [0] * K.r
            for i, e in zip(idx, parts):
                a[i] = e
            yield tuple(a)


def _compositions(total: int, k: int) -> Iterator[tuple[int, ...]]:
    if k == 1:
        yield (total,)
        return
    for first in range(1, total - k + 2):
        for rest in _compositions(total - first, k - 1):
            yield (first,) + rest


def in_frobenius_product(a: tuple[int, ...], s: int, n: int) -> bool:
    """Membership of ``x^a`` in ``m^[s] m^n``."""
    return max(a, default=0) >= s and sum(a) - s >= n


def _degree_cap(K: SimplicialComplex, s: int, n: int) -> int:
    # every face monomial of degree > d(s-1) has an exponent >= s
    return max(s + n - 1, K.d * (s - 1), 0)


def oracle_sr_colength(K: SimplicialComplex, s: int, n: int, budget: int = DEFAULT_BUDGET) -> int:
    """Count face monomials outside ``m^[s] m^n``."""
    if s < 1 or n < 0:
        raise InvalidQuery("need s >= 1 and n >= 0")
    cap = _degree_cap(K, s, n)
    MonomialBound(cap, s).check(K, budget)
    total, small = _tallies(K, s, cap)
    # survivors: every exponent < s, or degree < s + n
    return sum(small) + sum(total[D] - small[D] for D in range(min(cap + 1, s + n)))


def oracle_hilbert_samuel(K: SimplicialComplex, n: int, budget: int = DEFAULT_BUDGET) -> int:
    """Count face monomials of degree ``< n``."""
    if n < 0:
        raise InvalidQuery("need n >= 0")
    if n == 0:
        return 0
    MonomialBound(n - 1).check(K, budget)
    total, _ = _tallies(K, 1, n - 1)
    return sum(total)


def oracle_conca(K: SimplicialComplex, s: int, budget: int = DEFAULT_BUDGET) -> int:
    """Count face monomials with every exponent ``< s``."""
    if s < 1:
        raise InvalidQuery("need s >= 1")
    cap = K.d * (s - 1)
    MonomialBound(cap, s).check(K, budget)
    _, small = _tallies(K, s, cap)
    return sum(small)


def rees_layer(K: SimplicialComplex, s: int, n: int, budget: int = DEFAULT_BUDGET) -> int:
    """``l(n^n / J_n)`` where ``J_n`` is the degree-``n`` piece of ``(n^[s], n^[s] t^s)``.

    ``J_n = n^[s] n^n`` for ``n < s`` and ``n^[s] n^{n-s}`` for ``n >= s``.
    """
    cap = _degree_cap(K, s, n)
    MonomialBound(cap, s).check(K, budget)
    total, small = _tallies(K, s, cap)
    if n < s:
        # degree >= n, and (all exponents < s or degree < n + s)
        return sum(small[D] + (total[D] - small[D]) * (D < n + s) for D in range(n, cap + 1))
    return sum(small[D] for D in range(n, cap + 1))


def oracle_hk_rees(K: SimplicialComplex, s: int, budget: int = DEFAULT_BUDGET) -> int:
    """``l(Rees(n) / (n, n t)^[s])`` summed over t-degrees until the layers vanish."""
    if s < 1:
        raise InvalidQuery("need s >= 1")
    total = 0
    n = 0
    while True:
        term = rees_layer(K, s, n, budget)
        if term == 0 and n >= s:
            # once n^[s] n^{n-s} = n^n it stays so; confirm on two more layers
            if rees_layer(K, s, n + 1, budget) or rees_layer(K, s, n + 2, budget):
                raise AssertionError("Rees layers did not stabilise")
            return total
        total += term
        n += 1
