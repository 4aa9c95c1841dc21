"""Seeded random generators for sweeps and property checks."""

from __future__ import annotations

import random
from fractions import Fraction

from .analysis import admissible_b_interval
from .polynomial import DeltaVector, validate_delta


def random_rational(rng: random.Random, max_numerator=12, max_denominator=6) -> Fraction:
    return Fraction(rng.randint(0, max_numerator), rng.randint(1, max_denominator))


def random_symmetric_delta(
    rng: random.Random,
    degree: int,
    allow_zero_head: bool = False,
    max_numerator: int = 12,
    max_denominator: int = 6,
) -> DeltaVector:
    """Random symmetric nonnegative vector; the head entry is pinned to 1
    unless allow_zero_head (the roots only see the vector up to scale, so
    head 1 loses nothing except the degenerate zero-head family)."""
    while True:
        entries = [Fraction(0)] * (degree + 1)
        for i in range(degree // 2 + 1):
            entries[i] = random_rational(rng, max_numerator, max_denominator)
            entries[degree - i] = entries[i]
        if not allow_zero_head:
            entries[0] = entries[degree] = Fraction(1)
        if any(e != 0 for e in entries):
            return validate_delta(entries)


def random_asymmetric_delta(
    rng: random.Random,
    degree: int,
    max_numerator: int = 12,
    max_denominator: int = 6,
) -> DeltaVector:
    """Random nonnegative vector guaranteed not symmetric (degree >= 1)."""
    if degree < 1:
        raise ValueError("asymmetry needs degree >= 1")
    while True:
        entries = [
            random_rational(rng, max_numerator, max_denominator)
            for _ in range(degree + 1)
        ]
        if all(e == 0 for e in entries):
            continue
        v = DeltaVector(tuple(entries))
        if not v.is_symmetric:
            return v


def random_admissible_point(
    rng: random.Random, d: int, c_cap: float = 250.0
) -> tuple[Fraction, Fraction]:
    """Random exact (b, c) inside the complex-discriminant region for the
    degree-d family; membership is verified with exact arithmetic."""
    low = 34 - 12 * 5 ** 0.5 if d == 4 else 89 - 60 * 2 ** 0.5
    while True:
        c = Fraction(rng.uniform(low + 1e-6, c_cap)).limit_denominator(10**6)
        interval = admissible_b_interval(d, c)
        if interval is None:
            continue
        lo = max(0.0, float(interval.lower))
        hi = float(interval.upper)
        if hi <= lo:
            continue
        b = Fraction(rng.uniform(lo, hi)).limit_denominator(10**6)
        if b >= 0 and interval.contains(b):
            return b, c
