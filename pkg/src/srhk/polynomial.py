"""Exact univariate polynomials over Q.

Coefficients are :class:`fractions.Fraction`, constant term first. The
binomial basis ``B_k(s) = binom(s+k-1, k)`` is the output convention for
Hilbert-Kunz polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .errors import DuplicateAbscissa

Number = int | Fraction


class RationalPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def monomial(cls, k: int, coeff: Number = 1) -> "RationalPolynomial":
        return cls([0] * k + [coeff])

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    evaluate = __call__

    def derivative(self, order: int = 1) -> "RationalPolynomial":
        c = list(self.coeffs)
        for _ in range(order):
            c = [k * c[k] for k in range(1, len(c))]
        return RationalPolynomial(c)

    def shift(self, a: Number) -> "RationalPolynomial":
        """The polynomial ``p(x + a)``, via repeated synthetic division."""
        c = list(self.coeffs)
        n = len(c)
        for i in range(n):
            for k in range(n - 2, i - 1, -1):
                c[k] += a * c[k + 1]
        return RationalPolynomial(c)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def _coerce(self, other) -> "RationalPolynomial":
        if isinstance(other, RationalPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return RationalPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"RationalPolynomial({[str(c) for c in self.coeffs]})"

    def __str__(self):
        return format_terms([(c, _power("s", k)) for k, c in reversed(list(enumerate(self.coeffs)))])


def _power(var: str, k: int) -> str:
    return "" if k == 0 else var if k == 1 else f"{var}^{k}"


def format_terms(terms: Sequence[tuple[Fraction, str]]) -> str:
    """Render ``[(coeff, symbol), ...]`` as ``a X + b Y - c``."""
    parts = []
    for c, sym in terms:
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if sym and mag == 1:
            body = sym
        elif sym:
            body = f"{mag} {sym}" if mag.denominator == 1 else f"({mag}) {sym}"
        else:
            body = str(mag)
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def interpolate(points: Sequence[tuple[Number, Number]]) -> RationalPolynomial:
    """Unique polynomial of degree < len(points) through ``points``
    (Newton divided differences, exact).

    >>> str(interpolate([(1, 1), (2, 2), (3, 3)]))
    's'
    """
    if not points:
        raise ValueError("need at least one point")
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa("interpolation nodes must be distinct")
    table = [Fraction(y) for _, y in points]
    coef = [table[0]]
    for level in range(1, len(xs)):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(len(table) - 1)]
        coef.append(table[0])
    # Horner on the Newton form
    p = RationalPolynomial([coef[-1]])
    for k in range(len(coef) - 2, -1, -1):
        p = p * RationalPolynomial([-xs[k], 1]) + coef[k]
    return p


def evaluate(p: RationalPolynomial, x: Number) -> Fraction:
    return p(x)


def leading_coefficient(p: RationalPolynomial) -> Fraction:
    return p.leading_coefficient()


def derivative_at_one(h: RationalPolynomial | Sequence[Number], i: int) -> Fraction:
    """``h^{(i)}(1)``; ``h`` may be a coefficient sequence such as an h-vector."""
    if not isinstance(h, RationalPolynomial):
        h = RationalPolynomial(h)
    if i < 0:
        raise ValueError("derivative order must be non-negative")
    return h.derivative(i)(1)


def binomial_basis_poly(k: int) -> RationalPolynomial:
    """``B_k(s) = s (s+1) ... (s+k-1) / k!``."""
    p = RationalPolynomial([1])
    for j in range(k):
        p = p * RationalPolynomial([j, 1])
    return p * Fraction(1, factorial(k))


@dataclass(frozen=True)
class BinomialBasisForm:
    """Coefficients ``c_k`` of ``sum_k c_k B_k(s)``, indexed by ``k``."""

    coeffs: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def to_polynomial(self) -> RationalPolynomial:
        total = RationalPolynomial()
        for k, c in enumerate(self.coeffs):
            if c:
                total = total + binomial_basis_poly(k) * c
        return total

    def __call__(self, s: Number) -> Fraction:
        return self.to_polynomial()(s)

    def as_ints(self) -> list[int]:
        """Highest index first; raises if some coefficient is not integral."""
        if any(c.denominator != 1 for c in self.coeffs):
            raise ValueError("binomial form has non-integral coefficients")
        return [int(c) for c in reversed(self.coeffs)]

    def __str__(self):
        return format_terms([(c, f"B{k}" if k else "") for k, c in reversed(list(enumerate(self.coeffs)))])

    def latex(self) -> str:
        def sym(k):
            if k == 0:
                return ""
            if k == 1:
                return "s"
            return rf"\binom{{s+{k - 1}}}{{{k}}}"
        return format_terms([(c, sym(k)) for k, c in reversed(list(enumerate(self.coeffs)))])


def to_binomial_basis(p: RationalPolynomial) -> BinomialBasisForm:
    """Rewrite ``p`` in the basis ``B_k(s)`` by peeling off leading terms.

    >>> str(to_binomial_basis(RationalPolynomial([-1, Fraction(-2, 3), 0, Fraction(8, 3)])))
    '16 B3 - 16 B2 + 2 B1 - 1'
    """
    rest = p
    coeffs = [Fraction(0)] * (p.degree + 1)
    while rest.degree >= 0:
        k = rest.degree
        c = rest.leading_coefficient() * factorial(k)
        coeffs[k] = c
        rest = rest - binomial_basis_poly(k) * c
    return BinomialBasisForm(tuple(coeffs))
