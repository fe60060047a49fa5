"""HK(s) for the Rees algebra of the maximal ideal of a face ring.

For ``R = k[K]`` with maximal ideal ``n`` and Rees algebra
``Rees(n) = sum_n n^n t^n``, this module evaluates and fits

    HK(s) = l(Rees(n) / (n, n t)^[s]).

Writing ``r(n^s) = d - j`` for the reduction number of ``n^s``, the
Frobenius power stabilises in t-degree ``(d - j + 1) s`` and

    HK(s) = sum_{n<s} l(R/n^[s] n^n) + sum_{n<(d-j)s} l(R/n^[s] n^n)
            - sum_{1<=n<(d-j+1)s} l(R/n^n).

``j`` comes from the postulation number for Cohen-Macaulay rings and from
the sign of the top a-invariant otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Any

from .errors import BelowValidityThreshold, FitMismatch, MissingAInvariantData, ValidationError
from .homology import is_cohen_macaulay
from .lengths import conca_hk, hilbert_samuel, postulation_number_from_h, sr_colength
from .polynomial import BinomialBasisForm, RationalPolynomial, interpolate, to_binomial_basis
from .simplicial import SimplicialComplex

REPORT_SCHEMA = "srhk.hk-report/1"

_SIGNS = {"negative": "negative", "neg": "negative", "zero": "zero", "0": "zero"}


@dataclass(frozen=True)
class HKMode:
    """How ``j(s)`` is chosen.

    Cohen-Macaulay mode carries the postulation number; the other mode
    carries ``delta = max |a_i(R)|`` over finite a-invariants and the sign
    of ``a_d(R)``, both supplied by the caller.
    """

    cohen_macaulay: bool
    d: int
    postulation: int | None = None
    delta: int | None = None
    ad_sign: str | None = None

    def __post_init__(self):
        if self.cohen_macaulay:
            if self.postulation is None or not -self.d <= self.postulation <= 0:
                raise ValidationError(
                    f"Cohen-Macaulay mode needs -d <= postulation <= 0, got {self.postulation}")
        else:
            if self.delta is None or self.delta < 0:
                raise MissingAInvariantData("non-Cohen-Macaulay mode needs delta >= 0")
            sign = _SIGNS.get(str(self.ad_sign).lower())
            if sign is None:
                raise MissingAInvariantData("ad_sign must be 'negative' or 'zero'")
            object.__setattr__(self, "ad_sign", sign)

    @classmethod
    def cm(cls, K: SimplicialComplex) -> "HKMode":
        return cls(True, K.d, postulation=postulation_number_from_h(K.h_vector))

    @classmethod
    def non_cm(cls, K: SimplicialComplex, delta: int, ad_sign: str) -> "HKMode":
        return cls(False, K.d, delta=delta, ad_sign=ad_sign)

    def j(self, s: int) -> int:
        if self.cohen_macaulay:
            return -(self.postulation // s)
        return 1 if self.ad_sign == "negative" else 0

    @property
    def s_min(self) -> int:
        return 1 if self.cohen_macaulay else self.delta + 1

    @property
    def sample_start(self) -> int:
        """First ``s`` from which ``j(s)`` is constant."""
        if self.cohen_macaulay:
            return self.s_min + abs(self.postulation)
        return self.s_min

    def is_experimental(self, s: int) -> bool:
        if self.cohen_macaulay:
            return s < abs(self.postulation)
        return s <= self.delta

    def to_dict(self) -> dict[str, Any]:
        if self.cohen_macaulay:
            return {"variant": "CM", "postulation": self.postulation,
                    "s_min": self.s_min, "sample_start": self.sample_start}
        return {"variant": "NonCM", "delta": self.delta, "ad_sign": self.ad_sign,
                "s_min": self.s_min, "sample_start": self.sample_start}


def determine_mode(K: SimplicialComplex, char: int = 0, delta: int | None = None,
                   ad_sign: str | None = None) -> HKMode:
    """Pick the computation mode; explicit ``delta``/``ad_sign`` force the non-CM route."""
    if delta is not None or ad_sign is not None:
        if delta is None or ad_sign is None:
            raise MissingAInvariantData("both delta and ad_sign are required")
        return HKMode.non_cm(K, delta, ad_sign)
    if is_cohen_macaulay(K, char):
        return HKMode.cm(K)
    raise MissingAInvariantData(
        f"face ring is not Cohen-Macaulay in characteristic {char}; supply delta and ad_sign")


def hk_rees_at(K: SimplicialComplex, s: int, mode: HKMode | None = None, *,
               char: int = 0, experimental: bool = False) -> int:
    """``HK(s)`` for the Rees algebra of the maximal ideal of ``k[K]``.

    Below the validity threshold of a non-CM mode this raises unless
    ``experimental`` is set.
    """
    if mode is None:
        mode = determine_mode(K, char)
    if s < mode.s_min and not experimental:
        raise BelowValidityThreshold(f"s = {s} is below the validity threshold s >= {mode.s_min}")
    if s < 1:
        raise BelowValidityThreshold("s must be >= 1")
    top = K.d - mode.j(s)
    conca = conca_hk(K, s)

    def colength(n: int) -> int:
        return conca if n == 0 else sr_colength(K, s, n)

    low = sum(colength(n) for n in range(s))
    mid = sum(colength(n) for n in range(top * s))
    hs = sum(hilbert_samuel(K, n) for n in range(1, (top + 1) * s))
    return low + mid - hs


def c_constant(d: int) -> Fraction:
    """``c(d) = d/2 + d/(d+1)!`` from the Eto-Yoshida bound."""
    return Fraction(d, 2) + Fraction(d, factorial(d + 1))


@dataclass(frozen=True)
class EtoYoshidaVerdict:
    leading: Fraction
    bound: Fraction

    @property
    def equal(self) -> bool:
        return self.leading == self.bound

    @property
    def within(self) -> bool:
        return self.leading <= self.bound

    def to_dict(self) -> dict[str, Any]:
        return {"leading": str(self.leading), "bound": str(self.bound),
                "equal": self.equal, "within": self.within}


@dataclass
class HKReport:
    vertices: tuple[str, ...]
    facets: list[list[str]]
    r: int
    d: int
    f: tuple[int, ...]
    h: tuple[int, ...]
    mode: HKMode
    samples: dict[int, int]
    verification: dict[int, int]
    polynomial: RationalPolynomial
    binomial: BinomialBasisForm
    below_start: dict[int, bool] = field(default_factory=dict)
    oracle: dict[int, bool] | None = None

    @property
    def s_min(self) -> int:
        return self.mode.s_min

    @property
    def multiplicity(self) -> Fraction:
        """Coefficient of ``s^{d+1}``."""
        return self.polynomial.leading_coefficient()

    @property
    def bound_check(self) -> EtoYoshidaVerdict:
        return eto_yoshida_check(self)

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": REPORT_SCHEMA,
            "inputs": {"vertices": list(self.vertices), "facets": self.facets},
            "complex": {"r": self.r, "d": self.d, "f": list(self.f), "h": list(self.h)},
            "mode": self.mode.to_dict(),
            "samples": {str(s): v for s, v in sorted(self.samples.items())},
            "verification": {str(s): v for s, v in sorted(self.verification.items())},
            "below_start_agreement": {str(s): ok for s, ok in sorted(self.below_start.items())},
            "polynomial": {
                "monomial": [str(c) for c in self.polynomial.coeffs],
                "binomial": [str(c) for c in self.binomial.coeffs],
                "monomial_text": str(self.polynomial),
                "binomial_text": str(self.binomial),
            },
            "multiplicity": str(self.multiplicity),
            "bound_check": self.bound_check.to_dict(),
            "oracle": None if self.oracle is None else {str(s): ok for s, ok in sorted(self.oracle.items())},
        }


def hk_rees_polynomial(K: SimplicialComplex, mode: HKMode | None = None, *, char: int = 0,
                       oracle_points: int = 0) -> HKReport:
    """Fit the degree ``d+1`` polynomial giving ``HK(s)`` from ``mode.sample_start`` on.

    ``d+2`` samples determine the fit and two further values must agree
    with it, otherwise :class:`FitMismatch` is raised. Values at
    ``1 <= s < sample_start`` are compared against the fit and recorded,
    never asserted. ``oracle_points`` sample values are additionally
    recounted by brute force.
    """
    if mode is None:
        mode = determine_mode(K, char)
    d = K.d
    start = mode.sample_start
    fit_s = range(start, start + d + 2)
    check_s = range(start + d + 2, start + d + 4)
    samples = {s: hk_rees_at(K, s, mode) for s in fit_s}
    poly = interpolate(list(samples.items()))
    verification = {s: hk_rees_at(K, s, mode) for s in check_s}
    for s, v in verification.items():
        if poly(s) != v:
            raise FitMismatch(f"fitted polynomial gives {poly(s)} at s={s}, direct value is {v}")
    if poly.degree != d + 1:
        raise FitMismatch(f"fitted polynomial has degree {poly.degree}, expected {d + 1}")
    below = {s: poly(s) == hk_rees_at(K, s, mode, experimental=True) for s in range(1, start)}
    oracle = None
    if oracle_points:
        from .oracle import oracle_hk_rees
        oracle = {s: oracle_hk_rees(K, s) == v for s, v in list(samples.items())[:oracle_points]}
    return HKReport(
        vertices=K.vertices, facets=K.facet_labels(), r=K.r, d=d, f=K.f_vector, h=K.h_vector,
        mode=mode, samples=samples, verification=verification, polynomial=poly,
        binomial=to_binomial_basis(poly), below_start=below, oracle=oracle,
    )


def eto_yoshida_check(report: HKReport) -> EtoYoshidaVerdict:
    """Compare the multiplicity with ``c(d) * e(n)``, where ``e(n) = f_{d-1}``."""
    return EtoYoshidaVerdict(leading=report.multiplicity, bound=c_constant(report.d) * report.f[-1])
