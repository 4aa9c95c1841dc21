"""Exact polynomials built from nonnegative delta-vectors.

A delta-vector (d0, ..., dd) encodes the degree-d polynomial

    f(n) = sum_j  dj * C(n + d - j, d)

in the shifted-binomial basis.  Everything in this module is exact: entries
and coefficients are `fractions.Fraction`, expansions go through integer
products divided by d!, and identity checks compare coefficients with zero
tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

import mpmath as mp

from .errors import (
    AllZeroError,
    IndexOutOfRangeError,
    NegativeEntryError,
    ParityViolationError,
)

Rational = Fraction


def to_mpc(z) -> "mp.mpc":
    """Convert int/float/complex/Fraction/mpf/mpc to mpc at current precision."""
    if isinstance(z, Fraction):
        return mp.mpc(mp.mpf(z.numerator) / mp.mpf(z.denominator))
    return mp.mpc(z)


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass Fraction, int or 'p/q' string")
    return Fraction(value)


@dataclass(frozen=True)
class RationalPolynomial:
    """Power-basis polynomial with exact rational coefficients.

    Coefficients are stored constant term first with the trailing zeros
    stripped, so ``degree == len(coefficients) - 1`` and the leading
    coefficient is nonzero (the zero polynomial is the single tuple ``(0,)``
    with degree -1).
    """

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(_as_fraction(c) for c in self.coefficients)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if not coeffs:
            coeffs = (Fraction(0),)
        object.__setattr__(self, "coefficients", coeffs)

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self) -> int:
        if self.is_zero:
            return -1
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return self.coefficients == (Fraction(0),)

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coefficients[-1]

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        summed = list(a)
        for i, c in enumerate(b):
            summed[i] += c
        return RationalPolynomial(tuple(summed))

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "RationalPolynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        a, b = self.coefficients, other.coefficients
        if self.is_zero or other.is_zero:
            return RationalPolynomial((Fraction(0),))
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return RationalPolynomial(tuple(out))

    __rmul__ = __mul__

    def scale(self, factor) -> "RationalPolynomial":
        factor = _as_fraction(factor)
        return RationalPolynomial(tuple(c * factor for c in self.coefficients))

    def divmod(self, divisor: "RationalPolynomial"):
        """Exact euclidean division: returns (quotient, remainder)."""
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coefficients)
        dn = divisor.degree
        lead = divisor.leading_coefficient
        if self.degree < dn:
            return RationalPolynomial((Fraction(0),)), self
        quot = [Fraction(0)] * (self.degree - dn + 1)
        for k in range(self.degree - dn, -1, -1):
            c = rem[k + dn] / lead
            quot[k] = c
            if c != 0:
                for j, dc in enumerate(divisor.coefficients):
                    rem[k + j] -= c * dc
        return RationalPolynomial(tuple(quot)), RationalPolynomial(tuple(rem))

    def exact_divide(self, divisor: "RationalPolynomial") -> "RationalPolynomial":
        quot, rem = self.divmod(divisor)
        if not rem.is_zero:
            raise ValueError("division left a nonzero remainder")
        return quot

    # -- calculus / composition --------------------------------------------

    def derivative(self) -> "RationalPolynomial":
        if self.degree < 1:
            return RationalPolynomial((Fraction(0),))
        return RationalPolynomial(
            tuple(k * c for k, c in enumerate(self.coefficients) if k > 0)
        )

    def compose_linear(self, slope, intercept) -> "RationalPolynomial":
        """Return p(slope*n + intercept), exactly, via Horner composition."""
        slope = _as_fraction(slope)
        intercept = _as_fraction(intercept)
        arg = RationalPolynomial((intercept, slope))
        result = RationalPolynomial((self.coefficients[-1],))
        for c in reversed(self.coefficients[:-1]):
            result = result * arg + RationalPolynomial((c,))
        return result

    def shift(self, offset) -> "RationalPolynomial":
        """Return p(n + offset)."""
        return self.compose_linear(1, offset)

    # -- evaluation ----------------------------------------------------------

    def evaluate(self, x) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        x = _as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def evaluate_complex(self, z, precision_bits: int = 128):
        """Horner evaluation at a complex point with `precision_bits` of
        working precision; coefficients are rounded once on entry."""
        with mp.mp.workprec(precision_bits):
            zc = to_mpc(z)
            acc = mp.mpc(0)
            for c in reversed(self.coefficients):
                acc = acc * zc + mp.mpf(c.numerator) / mp.mpf(c.denominator)
            return acc

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0 and self.degree > 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*n")
            else:
                terms.append(f"{c}*n^{k}")
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class DeltaVector:
    """Sequence of nonnegative rationals (d0, ..., dd), not all zero."""

    entries: tuple[Fraction, ...]

    def __post_init__(self):
        entries = tuple(_as_fraction(e) for e in self.entries)
        if not entries:
            raise AllZeroError("delta-vector must be nonempty")
        for i, e in enumerate(entries):
            if e < 0:
                raise NegativeEntryError(f"entry {i} is negative: {e}")
        if all(e == 0 for e in entries):
            raise AllZeroError("all delta-vector entries are zero")
        object.__setattr__(self, "entries", entries)

    @property
    def degree(self) -> int:
        return len(self.entries) - 1

    @property
    def is_symmetric(self) -> bool:
        d = self.degree
        return all(self.entries[i] == self.entries[d - i] for i in range(d // 2 + 1))

    def as_strings(self) -> list[str]:
        return [str(e) for e in self.entries]


def validate_delta(entries: Iterable) -> DeltaVector:
    """Build a DeltaVector from any iterable of rationals (or 'p/q' strings).

    Raises NegativeEntryError / AllZeroError on invalid input.
    """
    return DeltaVector(tuple(_as_fraction(e) for e in entries))


@lru_cache(maxsize=4096)
def binomial_basis(d: int, j: int) -> RationalPolynomial:
    """The polynomial C(n + d - j, d), expanded exactly.

    Computed as the product of d linear factors divided by d!, never through
    floating-point factorials.
    """
    poly = RationalPolynomial((Fraction(1),))
    for t in range(d):
        poly = poly * RationalPolynomial((Fraction(d - j - t), Fraction(1)))
    return poly.scale(Fraction(1, math.factorial(d)))


def from_delta(v: DeltaVector) -> RationalPolynomial:
    """Expand sum_j dj * C(n + d - j, d) into the power basis."""
    d = v.degree
    coeffs = [Fraction(0)] * (d + 1)
    for j, dj in enumerate(v.entries):
        if dj == 0:
            continue
        for k, c in enumerate(binomial_basis(d, j).coefficients):
            coeffs[k] += dj * c
    return RationalPolynomial(tuple(coeffs))


def delta_from_polynomial(p: RationalPolynomial) -> tuple[Fraction, ...]:
    """Invert from_delta: recover (d0, ..., dd) from a degree-d polynomial.

    Uses the finite-difference form dj = sum_i (-1)^i C(d+1, i) p(j - i),
    which is the coefficient extraction implied by multiplying the series
    sum p(n) x^n by (1 - x)^(d+1).  Entries may be negative for polynomials
    outside the nonnegative cone.
    """
    d = p.degree
    if d < 0:
        raise ValueError("zero polynomial has no delta-vector")
    values = [p.evaluate(m) for m in range(d + 1)]
    out = []
    for j in range(d + 1):
        acc = Fraction(0)
        for i in range(j + 1):
            acc += Fraction((-1) ** i * math.comb(d + 1, i)) * values[j - i]
        out.append(acc)
    return tuple(out)


def symmetric_basis(d: int, i: int) -> RationalPolynomial:
    """Symmetric basis element: the pair-sum of falling products

        prod_{j<d} (n + d - i - j)  +  prod_{j<d} (n + i - j),

    collapsing to the single middle product when d is even and i = d/2.
    Satisfies (-1)^d N(-n-1) = N(n).
    """
    if not 0 <= i <= d // 2:
        raise IndexOutOfRangeError(f"basis index {i} outside 0..{d // 2}")

    def falling(start: int) -> RationalPolynomial:
        poly = RationalPolynomial((Fraction(1),))
        for j in range(d):
            poly = poly * RationalPolynomial((Fraction(start - j), Fraction(1)))
        return poly

    if d % 2 == 0 and i == d // 2:
        return falling(d // 2)
    return falling(d - i) + falling(i)


def reflect(p: RationalPolynomial) -> RationalPolynomial:
    """Return (-1)^degree * p(-n-1), exactly."""
    sign = 1 if p.degree % 2 == 0 else -1
    return p.compose_linear(-1, -1).scale(sign)


def check_functional_equation(p: RationalPolynomial) -> bool:
    """True iff p(n) = (-1)^d p(-n-1) holds coefficient-wise."""
    return reflect(p) == p


def half_shift(p: RationalPolynomial) -> RationalPolynomial:
    """Return d! * p(n - 1/2), exactly (d = degree of p)."""
    d = max(p.degree, 0)
    return p.shift(Fraction(-1, 2)).scale(math.factorial(d))


def parity_reduce(g: RationalPolynomial):
    """Split a pure-parity polynomial through the substitution X = n^2.

    For g with only even-degree terms, returns (G, 'even', 1) where
    G(n^2) = g(n).  For g with only odd-degree terms, extracts the factor n
    first and returns (G, 'odd', n) with n * G(n^2) = g(n).  Mixed-parity
    input raises ParityViolationError; no tolerance is applied.
    """
    coeffs = g.coefficients
    even_terms = [c for k, c in enumerate(coeffs) if k % 2 == 0]
    odd_terms = [c for k, c in enumerate(coeffs) if k % 2 == 1]
    has_even = any(c != 0 for c in even_terms)
    has_odd = any(c != 0 for c in odd_terms)
    if has_even and has_odd:
        raise ParityViolationError("mixed even/odd terms; cannot reduce")
    if has_odd:
        reduced = RationalPolynomial(tuple(odd_terms))
        factor = RationalPolynomial((Fraction(0), Fraction(1)))
        return reduced, "odd", factor
    reduced = RationalPolynomial(tuple(even_terms))
    return reduced, "even", RationalPolynomial((Fraction(1),))


def clear_denominators(p: RationalPolynomial) -> tuple[list[int], int]:
    """Return integer coefficients (constant first) and the positive
    multiplier that was applied.  Roots are unchanged."""
    mult = 1
    for c in p.coefficients:
        mult = mult * c.denominator // math.gcd(mult, c.denominator)
    ints = [int(c * mult) for c in p.coefficients]
    return ints, mult


def direct_binomial_value(v: DeltaVector, m: int) -> Fraction:
    """Independent oracle: sum_j dj * C(m + d - j, d) by integer binomials."""
    if m < 0:
        raise ValueError("oracle defined for m >= 0 only")
    d = v.degree
    acc = Fraction(0)
    for j, dj in enumerate(v.entries):
        acc += dj * math.comb(m + d - j, d)
    return acc
