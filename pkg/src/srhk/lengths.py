"""Closed-form colengths for face rings and their parameter quotients.

Notation: ``S = k[x_1..x_r]``, ``m`` its maximal ideal, ``R = k[K]`` the
face ring with maximal ideal ``n``, ``m^[s] = (x_1^s, ..., x_r^s)``.
Every formula routes binomials through :func:`binom`, which is zero
outside ``0 <= b <= a``.
"""

from __future__ import annotations

import os
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Mapping

from .errors import InvalidQuery, MissingAInvariant, NotCohenMacaulay, SubsetBlowup
from .homology import is_cohen_macaulay
from .polynomial import derivative_at_one
from .simplicial import SimplicialComplex

DEFAULT_SUBSET_CAP = int(os.environ.get("SRHK_SUBSET_CAP", 22))


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero when ``a < 0``, ``b < 0`` or ``b > a``."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def _check(s: int, n: int) -> None:
    if s < 1:
        raise InvalidQuery(f"s must be >= 1, got {s}")
    if n < 0:
        raise InvalidQuery(f"n must be >= 0, got {n}")


@lru_cache(maxsize=1 << 16)
def param_colength(d: int, s: int, n: int) -> int:
    """``l(S / m^[s] m^n)`` for a polynomial ring in ``d`` variables.

    ``d == 0`` is the residue field (length 1). Branches follow the
    piecewise formula for parameter ideals; ``n == 0`` gives ``s^d``.
    """
    _check(s, n)
    if d == 0:
        return 1
    if d == 1:
        return s + n
    if d == 2:
        if n <= s:
            return s * s + n * n + n
        return binom(n + s + 1, 2)
    if n <= s:
        return s**d + d * binom(n + d - 1, d)
    if n <= (d - 1) * s - 1:
        return s**d + sum(
            (-1) ** (i + 1) * binom(d, i) * binom(n - (i - 1) * s + d - 1, d)
            for i in range(1, d)
        )
    return binom(n + s + d - 1, d)


@lru_cache(maxsize=256)
def intersection_profile(K: SimplicialComplex, cap: int = DEFAULT_SUBSET_CAP) -> tuple[tuple[int, int], ...]:
    """Signed counts of subsets of minimal primes, aggregated by the
    number of variables surviving in ``S / (P_i1 + ... + P_ik)``.

    Returns ``((dim, coefficient), ...)`` with
    ``coefficient = sum over nonempty T with |cap_{i in T} F_i| = dim of (-1)^{|T|+1}``.
    Subtrees whose running intersection is already empty cancel unless
    they are leaves, so they are not walked.
    """
    facets = K.facets
    alpha = len(facets)
    if alpha > cap:
        raise SubsetBlowup(f"{alpha} minimal primes exceeds the cap of {cap}")
    totals: Counter[int] = Counter()

    def walk(start: int, inter: int, size: int) -> None:
        for i in range(start, alpha):
            cur = inter & facets[i]
            sign = 1 if size % 2 == 0 else -1  # (-1)^{(size+1)+1}
            if cur == 0:
                # all extensions also have d_T = 0 and sum to zero unless none exist
                if i == alpha - 1:
                    totals[0] += sign
                continue
            totals[cur.bit_count()] += sign
            walk(i + 1, cur, size + 1)

    walk(0, (1 << K.r) - 1, 0)
    return tuple(sorted((k, v) for k, v in totals.items() if v))


def sr_colength(K: SimplicialComplex, s: int, n: int, cap: int = DEFAULT_SUBSET_CAP) -> int:
    """``l(S / (I_K + m^[s] m^n))`` by inclusion-exclusion over minimal primes."""
    _check(s, n)
    if len(K.facets) == 1:
        return param_colength(K.r, s, n)
    return sum(c * param_colength(dim, s, n) for dim, c in intersection_profile(K, cap))


@lru_cache(maxsize=256)
def _hs_weights(h: tuple[int, ...]) -> tuple[Fraction, ...]:
    # (-1)^i h^{(i)}(1) / i!
    return tuple((-1) ** i * derivative_at_one(h, i) / factorial(i) for i in range(len(h)))


def hilbert_samuel(K: SimplicialComplex, n: int) -> int:
    """``l(R / n^n)`` from the h-vector; ``n == 0`` gives 0."""
    if n < 0:
        raise InvalidQuery(f"n must be >= 0, got {n}")
    if n == 0:
        return 0
    d = K.d
    w = _hs_weights(K.h_vector)
    total = sum(w[i] * binom(n - 1 + d - i, d - i) for i in range(d + 1))
    assert total.denominator == 1
    return int(total)


def conca_hk(K: SimplicialComplex, s: int) -> int:
    """``l(R / n^[s]) = sum_i f_{i-1} (s-1)^i``."""
    if s < 1:
        raise InvalidQuery(f"s must be >= 1, got {s}")
    return sum(f * (s - 1) ** i for i, f in enumerate(K.f_vector))


def hilbert_series(K: SimplicialComplex) -> tuple[tuple[int, ...], int]:
    """Hilbert series of the face ring as ``(h-vector numerator, d)`` over ``(1-t)^d``.

    The numerator is cross-checked against the face-count form
    ``sum_i f_{i-1} t^i / (1-t)^i`` brought over ``(1-t)^d``.
    """
    d = K.d
    f = K.f_vector
    num = [0] * (d + 1)
    for i, fi in enumerate(f):
        # t^i (1-t)^{d-i}
        for k in range(d - i + 1):
            num[i + k] += fi * (-1) ** k * comb(d - i, k)
    h = K.h_vector
    if tuple(num) != h:
        raise AssertionError(f"h-vector {h} disagrees with face-count numerator {num}")
    return h, d


def hilbert_series_coefficients(K: SimplicialComplex, upto: int) -> list[int]:
    """``dim_k R_i`` for ``i = 0..upto`` expanded from the rational form."""
    h, d = hilbert_series(K)
    return [sum(h[j] * binom(i - j + d - 1, d - 1) if d else h[j] * (i == j)
                for j in range(min(i, d) + 1)) for i in range(upto + 1)]


def postulation_number_from_h(h: tuple[int, ...]) -> int:
    """``deg h - d`` where ``d = len(h) - 1``."""
    deg = max(i for i, x in enumerate(h) if x)
    return deg - (len(h) - 1)


def postulation_number(K: SimplicialComplex, char: int = 0) -> int:
    """Postulation number of the maximal ideal of a Cohen-Macaulay face ring."""
    if not is_cohen_macaulay(K, char):
        raise NotCohenMacaulay(f"face ring is not Cohen-Macaulay in characteristic {char}")
    return postulation_number_from_h(K.h_vector)


def reduction_number_marley(K: SimplicialComplex, s: int, char: int = 0) -> int:
    """``r(n^s) = floor(n(n) / s) + d`` for Cohen-Macaulay face rings."""
    if s < 1:
        raise InvalidQuery(f"s must be >= 1, got {s}")
    return postulation_number(K, char) // s + K.d


def reduction_number_hoa(a_invariants: Mapping[int, int | None], spread: int) -> int:
    """Stable reduction number of large powers from the top a-invariant.

    ``a_invariants`` maps cohomological degree to ``a_i`` (``None`` for
    a vanishing module). Valid for powers beyond every ``|a_i|``.
    """
    a = a_invariants.get(spread)
    if a is None:
        raise MissingAInvariant(f"a_{spread} is needed and must be finite")
    return spread if a >= 0 else spread - 1
