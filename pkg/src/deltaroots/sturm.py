"""Exact real-root counting via Sturm sequences.

Chains are built over the integers (denominators cleared, content stripped)
with pseudo-remainders, scaling each element only by positive constants so
the sign-variation counts match the textbook rational chain exactly.  Sign
variations use the zero-skip convention, which makes V(lo) - V(hi) count the
distinct real roots in the half-open interval (lo, hi] even when an endpoint
is itself a root, so no epsilon nudging is ever needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateInputError
from .polynomial import DeltaVector, RationalPolynomial, clear_denominators, from_delta

IntPoly = tuple[int, ...]


def _strip(coeffs) -> IntPoly:
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _is_zero(f: IntPoly) -> bool:
    return f == (0,)


def _content(f: IntPoly) -> int:
    g = 0
    for c in f:
        g = math.gcd(g, abs(c))
    return g or 1


def _primitive(f: IntPoly) -> IntPoly:
    g = _content(f)
    return tuple(c // g for c in f)


def _pseudo_rem(f: IntPoly, g: IntPoly) -> IntPoly:
    """Pseudo-remainder of f by g, adjusted to be a positive multiple of the
    true rational remainder (so Sturm sign patterns are preserved)."""
    df, dg = len(f) - 1, len(g) - 1
    lead = g[-1]
    rem = [c * lead ** (df - dg + 1) for c in f]
    for k in range(df - dg, -1, -1):
        c, q = divmod(rem[k + dg], lead)
        assert q == 0
        if c:
            for j in range(dg + 1):
                rem[k + j] -= c * g[j]
        rem[k + dg] = 0
    out = _strip(rem)
    if lead < 0 and (df - dg + 1) % 2 == 1:
        out = tuple(-c for c in out)
    return out


def _int_derivative(f: IntPoly) -> IntPoly:
    if len(f) == 1:
        return (0,)
    return _strip(k * c for k, c in enumerate(f) if k > 0)


def _int_gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive gcd over the integers by pseudo-remainder iteration."""
    a, b = _primitive(f), _primitive(g)
    if len(a) < len(b):
        a, b = b, a
    while not _is_zero(b):
        a, b = b, _primitive(_pseudo_rem(a, b))
    if a[-1] < 0:
        a = tuple(-c for c in a)
    return a


def _exact_int_divide(f: IntPoly, g: IntPoly) -> IntPoly:
    """Exact division of integer polynomials (remainder must vanish)."""
    rem = [Fraction(c) for c in f]
    dg = len(g) - 1
    lead = Fraction(g[-1])
    quot = [Fraction(0)] * (len(f) - dg)
    for k in range(len(f) - 1 - dg, -1, -1):
        c = rem[k + dg] / lead
        quot[k] = c
        if c:
            for j in range(dg + 1):
                rem[k + j] -= c * g[j]
    assert all(r == 0 for r in rem), "inexact division"
    assert all(c.denominator == 1 for c in quot)
    return _strip(int(c) for c in quot)


def _eval_sign(f: IntPoly, x: Fraction) -> int:
    """Sign of f(x), evaluated exactly by Horner."""
    acc = Fraction(0)
    for c in reversed(f):
        acc = acc * x + c
    return (acc > 0) - (acc < 0)


def _variations(signs) -> int:
    nonzero = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)


@dataclass(frozen=True)
class SturmChain:
    """Sturm chain of the squarefree part of a polynomial.

    `polynomials` holds integer-coefficient chain elements (constant first),
    each a positive multiple of the exact rational chain element.
    `had_multiple_roots` records whether gcd(p, p') was nontrivial.
    """

    polynomials: tuple[IntPoly, ...]
    had_multiple_roots: bool

    @property
    def squarefree(self) -> IntPoly:
        return self.polynomials[0]

    def variations_at(self, x: Fraction) -> int:
        return _variations(_eval_sign(f, x) for f in self.polynomials)


def integer_polynomial(p: RationalPolynomial) -> IntPoly:
    ints, _ = clear_denominators(p)
    return _strip(ints)


def squarefree_part(p: RationalPolynomial) -> tuple[IntPoly, bool]:
    """Integer squarefree part of p plus a had-multiple-roots flag."""
    f = integer_polynomial(p)
    df = _int_derivative(f)
    if _is_zero(df):
        raise DegenerateInputError("constant polynomial")
    g = _int_gcd(f, df)
    if len(g) == 1:
        return _primitive(f), False
    return _primitive(_exact_int_divide(f, g)), True


def sturm_sequence(p: RationalPolynomial) -> SturmChain:
    """Exact Sturm chain; built on the squarefree part when p has multiple
    roots (the flag records that multiplicities were collapsed)."""
    if p.degree < 1:
        raise DegenerateInputError("need degree >= 1")
    sf, multiple = squarefree_part(p)
    chain = [sf, _primitive(_int_derivative(sf))]
    while len(chain[-1]) > 1:
        rem = _pseudo_rem(chain[-2], chain[-1])
        if _is_zero(rem):
            break
        chain.append(_primitive(tuple(-c for c in rem)))
    return SturmChain(tuple(chain), multiple)


def count_real_roots(chain: SturmChain, lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots of the chain's polynomial in (lo, hi], exactly.

    The zero-skip variation convention handles endpoints that are roots: a
    root at lo is excluded, a root at hi included, with no perturbation.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError("need lo < hi")
    return chain.variations_at(lo) - chain.variations_at(hi)


def cauchy_bound(p: RationalPolynomial) -> Fraction:
    """1 + max |a_i / a_d|: every root lies strictly inside this radius."""
    lead = abs(p.leading_coefficient)
    if lead == 0:
        raise DegenerateInputError("zero polynomial")
    others = [abs(c) / lead for c in p.coefficients[:-1]]
    return 1 + (max(others) if others else Fraction(0))


def count_real_roots_outside(p: RationalPolynomial, lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots strictly below lo or strictly above hi.

    Both comparisons are exact; roots exactly at lo or hi do not count as
    outside.  Implemented with half-open Sturm counts over an interval
    guaranteed (Cauchy bound) to contain every real root.
    """
    chain = sturm_sequence(p)
    bound = cauchy_bound(p) + 1
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        raise ValueError("need lo <= hi")
    left = 0
    if -bound < lo:
        left = count_real_roots(chain, -bound, lo)
        if p.evaluate(lo) == 0:
            left -= 1
    right = 0
    if hi < bound:
        right = count_real_roots(chain, hi, bound)
    return left + right


def certify_real_strip(v: DeltaVector) -> "RealStripCertificate":
    """Exact certificate that every real root of from_delta(v) lies in the
    closed interval [-floor(d/2), floor(d/2) - 1].

    Boundary roots are allowed (the interval is closed); everything is
    integer/rational arithmetic with zero tolerance.  At d = 1 the floored
    interval degenerates to the empty set, so the unfloored bounds
    [-1/2, -1/2] are certified instead (the lone root of a symmetric
    degree-1 input is -1/2).
    """
    d = v.degree
    if d == 1:
        lower = upper = Fraction(-1, 2)
    else:
        k = d // 2
        lower, upper = Fraction(-k), Fraction(k - 1)
    p = from_delta(v)
    outside = count_real_roots_outside(p, lower, upper)
    return RealStripCertificate(
        lower=lower,
        upper=upper,
        outside_count=outside,
        passed=outside == 0,
    )


@dataclass(frozen=True)
class RealStripCertificate:
    """Verdict of the exact real-root strip check."""

    lower: Fraction
    upper: Fraction
    outside_count: int
    passed: bool
