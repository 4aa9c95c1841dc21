"""Exact arithmetic on values of the form p + q*sqrt(m) with rational p, q, m.

Region boundaries in the discriminant analysis are irrational (34 - 12*sqrt(5)
and friends), so verdicts near an edge cannot rely on floating comparison.
Signs are decided exactly by squaring; only the float views round.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp


def sqrt_exact(value: Fraction) -> Fraction | None:
    """Exact rational square root, or None when the value is irrational."""
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class Radical:
    """The exact value p + q*sqrt(m), with m >= 0 rational.

    Normalized so that perfect-square radicands fold into the rational part
    and q == 0 forces m == 0.  Sums and products stay inside the same
    extension field (one fixed m per expression tree).
    """

    p: Fraction
    q: Fraction = Fraction(0)
    m: Fraction = Fraction(0)

    def __post_init__(self):
        p = Fraction(self.p)
        q = Fraction(self.q)
        m = Fraction(self.m)
        if m < 0:
            raise ValueError("negative radicand")
        root = sqrt_exact(m)
        if root is not None:
            p, q, m = p + q * root, Fraction(0), Fraction(0)
        if q == 0:
            m = Fraction(0)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "m", m)

    # -- predicates ---------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def sign(self) -> int:
        """Exact sign via difference-of-squares, no rounding."""
        p, q, m = self.p, self.q, self.m
        if q == 0:
            return (p > 0) - (p < 0)
        if p == 0:
            return 1 if q > 0 else -1
        if p > 0 and q > 0:
            return 1
        if p < 0 and q < 0:
            return -1
        # opposite signs: compare p^2 against q^2 * m
        lhs, rhs = p * p, q * q * m
        if lhs == rhs:
            return 0
        bigger_rational = lhs > rhs
        return (1 if bigger_rational else -1) * (1 if p > 0 else -1)

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> "Radical":
        if isinstance(other, Radical):
            if other.q != 0 and self.q != 0 and other.m != self.m:
                raise ValueError("mixed radicands are not supported")
            return other
        return Radical(Fraction(other))

    def __add__(self, other) -> "Radical":
        other = self._coerce(other)
        m = self.m if self.q != 0 else other.m
        return Radical(self.p + other.p, self.q + other.q, m)

    __radd__ = __add__

    def __neg__(self) -> "Radical":
        return Radical(-self.p, -self.q, self.m)

    def __sub__(self, other) -> "Radical":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Radical":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Radical":
        other = self._coerce(other)
        m = self.m if self.q != 0 else other.m
        return Radical(
            self.p * other.p + self.q * other.q * m,
            self.p * other.q + self.q * other.p,
            m,
        )

    __rmul__ = __mul__

    # -- comparisons (against rationals or same-field radicals) -------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        return (self - other).sign() == 0

    def __lt__(self, other) -> bool:
        return (self - self._coerce(other)).sign() < 0

    def __le__(self, other) -> bool:
        return (self - self._coerce(other)).sign() <= 0

    def __gt__(self, other) -> bool:
        return (self - self._coerce(other)).sign() > 0

    def __ge__(self, other) -> bool:
        return (self - self._coerce(other)).sign() >= 0

    def __hash__(self):
        return hash((self.p, self.q, self.m))

    # -- float views ---------------------------------------------------------

    def __float__(self) -> float:
        return float(self.p) + float(self.q) * math.sqrt(float(self.m))

    def to_mpf(self, precision_bits: int = 128):
        with mp.mp.workprec(precision_bits):
            p = mp.mpf(self.p.numerator) / mp.mpf(self.p.denominator)
            q = mp.mpf(self.q.numerator) / mp.mpf(self.q.denominator)
            m = mp.mpf(self.m.numerator) / mp.mpf(self.m.denominator)
            return p + q * mp.sqrt(m)

    def __str__(self) -> str:
        if self.q == 0:
            return str(self.p)
        return f"{self.p} + {self.q}*sqrt({self.m})"


@dataclass(frozen=True)
class QuadraticRoots:
    """Exact root pair of a quadratic: center +/- scale * sqrt(radicand).

    The radicand keeps its sign: nonnegative means a real pair, negative a
    conjugate pair center +/- i * scale * sqrt(-radicand).  `scale` is kept
    nonnegative so the '+' root is the upper/right one.
    """

    center: Fraction
    scale: Fraction
    radicand: Fraction

    @property
    def discriminant_sign(self) -> int:
        return (self.radicand > 0) - (self.radicand < 0)

    @property
    def is_real(self) -> bool:
        return self.radicand >= 0

    def real_pair(self) -> tuple[Radical, Radical]:
        if not self.is_real:
            raise ValueError("roots are a complex pair")
        off = Radical(Fraction(0), self.scale, self.radicand)
        return (Radical(self.center) - off, Radical(self.center) + off)

    def rational_pair(self) -> tuple[Fraction, Fraction] | None:
        """The pair as exact rationals when the radicand is a perfect square."""
        if not self.is_real:
            return None
        root = sqrt_exact(self.radicand)
        if root is None:
            return None
        off = self.scale * root
        return (self.center - off, self.center + off)

    def imaginary_magnitude(self) -> Radical:
        """|imaginary part| for a complex pair (0 for a real pair)."""
        if self.is_real:
            return Radical(Fraction(0))
        return Radical(Fraction(0), self.scale, -self.radicand)

    def evaluate(self, precision_bits: int = 128):
        """Both roots as mpc values at the requested precision, '-' first."""
        with mp.mp.workprec(precision_bits):
            c = mp.mpf(self.center.numerator) / mp.mpf(self.center.denominator)
            s = mp.mpf(self.scale.numerator) / mp.mpf(self.scale.denominator)
            r = mp.mpf(self.radicand.numerator) / mp.mpf(self.radicand.denominator)
            if self.radicand >= 0:
                off = s * mp.sqrt(r)
                return (mp.mpc(c - off), mp.mpc(c + off))
            off = s * mp.sqrt(-r)
            return (mp.mpc(c, -off), mp.mpc(c, off))


def solve_quadratic(a2: Fraction, a1: Fraction, a0: Fraction) -> QuadraticRoots:
    """Exact roots of a2*x^2 + a1*x + a0 in radical form.

    Returns -a1/(2*a2) +/- (1/(2*|a2|)) * sqrt(a1^2 - 4*a2*a0) with the
    discriminant sign preserved; no floating approximation happens here.
    """
    a2, a1, a0 = Fraction(a2), Fraction(a1), Fraction(a0)
    if a2 == 0:
        raise ZeroDivisionError("leading coefficient is zero")
    disc = a1 * a1 - 4 * a2 * a0
    return QuadraticRoots(
        center=-a1 / (2 * a2),
        scale=abs(Fraction(1, 2) / a2),
        radicand=disc,
    )
