"""Hit any real target in the admissible interval with a symmetric vector.

For even degree d = 2k the three-binomial family  C(n+k+1, d) + w*C(n+k, d)
+ C(n+k-1, d)  reduces, after exact division by the shared linear factors,
to the quadratic  (w+2)n^2 + (w+2)n + wk(1-k) + 2k^2  whose roots are
-1/2 +/- h(w); odd degrees use the four-binomial analogue with an extra
(2n+1) factor.  h is monotone in the weight w and sweeps [0, k - 1/2), so
inverting it solves for the weight that realizes a prescribed root; the
interval endpoints -k and k-1 are hit by pure binomial vectors instead."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterBelowThresholdError, TargetOutOfRangeError
from .polynomial import (
    DeltaVector,
    RationalPolynomial,
    binomial_basis,
    delta_from_polynomial,
    validate_delta,
)
from .radicals import QuadraticRoots, Radical, solve_quadratic


def _binomial_shift(d: int, s: int) -> RationalPolynomial:
    """C(n + s, d) as an exact polynomial."""
    return binomial_basis(d, d - s)


def weight_threshold(d: int) -> Fraction:
    """Smallest weight for which the reduced quadratic stays real."""
    k = d // 2
    if d % 2 == 0:
        return Fraction(2 * (2 * k + 1), 2 * k - 1)
    return Fraction(12 * k * k + 12 * k - 1, (2 * k - 1) ** 2)


def offset_squared(d: int, weight: Fraction) -> Fraction:
    """Exact square of the realized offset h(weight) from -1/2."""
    k = d // 2
    w = Fraction(weight)
    if d % 2 == 0:
        return (2 * k - 1) * ((2 * k - 1) * w - 2 * (2 * k + 1)) / (4 * (w + 2))
    return ((2 * k - 1) ** 2 * w - (12 * k * k + 12 * k - 1)) / (4 * (w + 1))


@dataclass(frozen=True)
class RealizationPlan:
    """A constructed vector together with its exact reduced quadratic."""

    d: int
    k: int
    parity: str
    weight: Fraction
    delta: DeltaVector
    reduced_quadratic: tuple[Fraction, Fraction, Fraction]
    realized_offset: Radical


@dataclass(frozen=True)
class BoundaryRealization:
    """Interval endpoints are realized by pure binomial vectors, not by the
    weighted family (the weight would have to be infinite)."""

    d: int
    target: Fraction
    delta: DeltaVector
    description: str


def construct(d: int, weight) -> RealizationPlan:
    """Build the weighted binomial family member and reduce it exactly.

    Raises ParameterBelowThresholdError when the weight is below the
    parity-specific threshold (the reduced quadratic would go complex,
    leaving nothing real to realize)."""
    if d < 2:
        raise ValueError("need degree >= 2")
    weight = Fraction(weight)
    threshold = weight_threshold(d)
    if weight < threshold:
        raise ParameterBelowThresholdError(
            f"weight {weight} below threshold {threshold} for degree {d}"
        )
    k = d // 2
    if d % 2 == 0:
        f = (
            _binomial_shift(d, k + 1)
            + _binomial_shift(d, k).scale(weight)
            + _binomial_shift(d, k - 1)
        )
        parity = "even"
    else:
        f = (
            _binomial_shift(d, k + 2)
            + _binomial_shift(d, k + 1).scale(weight)
            + _binomial_shift(d, k).scale(weight)
            + _binomial_shift(d, k - 1)
        )
        parity = "odd"
    delta = validate_delta(delta_from_polynomial(f))

    divisor = RationalPolynomial((Fraction(1),))
    for j in range(-k + 2, k):
        divisor = divisor * RationalPolynomial((Fraction(j), Fraction(1)))
    if parity == "odd":
        divisor = divisor * RationalPolynomial((Fraction(1), Fraction(2)))
    reduced = f.scale(math.factorial(d)).exact_divide(divisor)
    assert reduced.degree == 2
    a0, a1, a2 = reduced.coefficients

    return RealizationPlan(
        d=d,
        k=k,
        parity=parity,
        weight=weight,
        delta=delta,
        reduced_quadratic=(a2, a1, a0),
        realized_offset=Radical(Fraction(0), Fraction(1), offset_squared(d, weight)),
    )


def boundary_delta(d: int, target: Fraction) -> BoundaryRealization:
    k = d // 2
    if d % 2 == 0:
        entries = [Fraction(0)] * (d + 1)
        entries[k] = Fraction(1)
        description = f"single binomial C(n+{k}, {d})"
    else:
        entries = [Fraction(0)] * (d + 1)
        entries[k] = Fraction(1)
        entries[k + 1] = Fraction(1)
        description = f"binomial pair C(n+{k + 1}, {d}) + C(n+{k}, {d})"
    return BoundaryRealization(
        d=d,
        target=target,
        delta=validate_delta(entries),
        description=description,
    )


def solve_parameter(d: int, target) -> Fraction | BoundaryRealization:
    """Invert the offset map: the weight whose plan has `target` as a root.

    Targets must lie in the closed interval [-floor(d/2), floor(d/2) - 1];
    the two endpoints return a BoundaryRealization naming the pure binomial
    vector that attains them."""
    if d < 2:
        raise ValueError("need degree >= 2")
    target = Fraction(target)
    k = d // 2
    if not -k <= target <= k - 1:
        raise TargetOutOfRangeError(
            f"target {target} outside [{-k}, {k - 1}] for degree {d}"
        )
    if target == -k or target == k - 1:
        return boundary_delta(d, target)
    t = abs(target + Fraction(1, 2))
    denom = Fraction((2 * k - 1) ** 2) - 4 * t * t
    assert denom > 0
    if d % 2 == 0:
        return (8 * t * t + 2 * Fraction(4 * k * k - 1)) / denom
    return (4 * t * t + Fraction(12 * k * k + 12 * k - 1)) / denom


def realized_roots_exact(plan: RealizationPlan) -> QuadraticRoots:
    """Exact radical root pair -1/2 +/- h(weight) of the reduced quadratic."""
    a2, a1, a0 = plan.reduced_quadratic
    return solve_quadratic(a2, a1, a0)
