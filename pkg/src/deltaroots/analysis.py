"""Strip and norm verdicts for root sets, and the exact discriminant-region
analysis of the two-parameter quartic/quintic families.

Strip checks compare root real parts against closed bounds, charging each
comparison against the root's error radius: a violation must exceed the
numeric uncertainty to be reported, an uncertain comparison either resolves
exactly (boundary roots of rational polynomials) or escalates precision.

The family analysis works on delta-vectors (1, b, c, b, 1) at degree 4 and
(1, b, c, c, b, 1) at degree 5: the half-shifted polynomial is even (odd
degrees shed a factor n), its quadratic in X = n^2 has exact rational
coefficients, and the sign of the discriminant splits the (b, c) plane into
a real regime and two complex regimes whose real-part magnitudes stay below
sqrt(2*sqrt(5)+1)/2 (degree 4) and 2*sqrt(14)/7 (degree 5)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .errors import InconclusiveCheckError
from .polynomial import (
    DeltaVector,
    RationalPolynomial,
    from_delta,
    half_shift,
    parity_reduce,
    validate_delta,
)
from .radicals import Radical
from .roots import ComplexRoot, RootSet, SolverConfig, classify_roots, find_roots
from .sturm import count_real_roots, sturm_sequence

STRIP_KINDS = ("full_strip", "half_strip", "floor_strip")

MAX_PRECISION_BITS = 1024


@dataclass(frozen=True)
class BoundCheck:
    """Verdict record for one strip or norm-disk criterion.

    `margins` are signed distances to the nearest bound (positive inside),
    one per root in root-set order.  `passed` is False exactly when
    `violators` is nonempty."""

    kind: str
    lower: Fraction | None
    upper: Fraction | None
    radius: Fraction | None
    margins: tuple[float, ...]
    passed: bool
    violators: tuple[ComplexRoot, ...]
    note: str = ""


def strip_bounds(kind: str, d: int) -> tuple[Fraction, Fraction]:
    if kind == "full_strip":
        return Fraction(-d), Fraction(d - 1)
    if kind == "half_strip":
        return Fraction(-d, 2), Fraction(d, 2) - 1
    if kind == "floor_strip":
        k = d // 2
        return Fraction(-k), Fraction(k - 1)
    raise ValueError(f"unknown strip kind {kind!r}")


def _is_exact_boundary_root(
    p: RationalPolynomial, root: ComplexRoot, bound: Fraction, slack: float
) -> bool:
    if p.evaluate(bound) != 0:
        return False
    z = mp.mpc(root.re, root.im)
    return float(abs(z - mp.mpf(bound.numerator) / mp.mpf(bound.denominator))) <= slack


def strip_check(
    rs: RootSet, d: int, kind: str, p: RationalPolynomial | None = None
) -> BoundCheck:
    """Check every root's real part against the closed strip for `kind`.

    A root whose error radius straddles a bound is resolved exactly when the
    polynomial is supplied and the bound itself is a root (closed strips
    admit boundary roots); otherwise InconclusiveCheckError escalates to the
    caller for a higher-precision retry."""
    lower, upper = strip_bounds(kind, d)
    margins = []
    violators = []
    with mp.mp.workprec(rs.precision_bits + 16):
        lower_mp = mp.mpf(lower.numerator) / mp.mpf(lower.denominator)
        upper_mp = mp.mpf(upper.numerator) / mp.mpf(upper.denominator)
        for root in rs.roots:
            margin = min(root.re - lower_mp, upper_mp - root.re)
            slack = max(root.error_radius, 2.0 ** (-rs.precision_bits / 2.0))
            if margin < -slack:
                violators.append(root)
            elif abs(margin) <= slack:
                resolved = False
                if p is not None:
                    for bound in (lower, upper):
                        if _is_exact_boundary_root(p, root, bound, 2 * slack):
                            margin = mp.mpf(0)
                            resolved = True
                            break
                if not resolved:
                    raise InconclusiveCheckError(
                        f"root near {float(root.re)} straddles a {kind} bound "
                        f"at {rs.precision_bits} bits"
                    )
            margins.append(float(margin))
    return BoundCheck(
        kind=kind,
        lower=lower,
        upper=upper,
        radius=None,
        margins=tuple(margins),
        passed=not violators,
        violators=tuple(violators),
    )


def norm_disk_radius(d: int) -> Fraction:
    """Disk radius d(2d-1)/2 about -1/2; matches 14 at d=4 and 45/2 at d=5."""
    return Fraction(d * (2 * d - 1), 2)


def norm_check(rs: RootSet, d: int) -> BoundCheck:
    """Check |root + 1/2| against the degree-d norm disk."""
    radius = norm_disk_radius(d)
    margins = []
    violators = []
    with mp.mp.workprec(rs.precision_bits + 16):
        radius_mp = mp.mpf(radius.numerator) / mp.mpf(radius.denominator)
        for root in rs.roots:
            dist = abs(mp.mpc(root.re, root.im) + mp.mpf("0.5"))
            if dist > radius_mp + root.error_radius:
                violators.append(root)
            margins.append(float(radius_mp - dist))
    note = "" if d in (4, 5) else "radius extrapolated beyond degrees 4 and 5"
    return BoundCheck(
        kind="norm_disk",
        lower=None,
        upper=None,
        radius=radius,
        margins=tuple(margins),
        passed=not violators,
        violators=tuple(violators),
        note=note,
    )


def resolve_strip(
    p: RationalPolynomial,
    d: int,
    kind: str,
    cfg: SolverConfig | None = None,
    classify: bool = True,
) -> tuple[RootSet, BoundCheck]:
    """Solve, check, and double precision until the verdict is conclusive.

    Precision doubles up to MAX_PRECISION_BITS before the inconclusive
    verdict is allowed to propagate."""
    cfg = cfg or SolverConfig()
    bits = cfg.precision_bits
    while True:
        attempt = SolverConfig(
            precision_bits=bits,
            max_iterations=max(cfg.max_iterations, bits),
            convergence_factor=None,
        )
        rs = find_roots(p, attempt)
        if classify:
            rs = classify_roots(rs, p)
        try:
            return rs, strip_check(rs, d, kind, p)
        except InconclusiveCheckError:
            if bits >= MAX_PRECISION_BITS:
                raise
            bits = min(2 * bits, MAX_PRECISION_BITS)


# -- two-parameter family analysis ------------------------------------------


@dataclass(frozen=True)
class BInterval:
    """Exact b-interval on which the reduced quadratic has complex roots."""

    lower: Radical
    upper: Radical
    lower_closed: bool

    def contains(self, b: Fraction) -> bool:
        b = Fraction(b)
        if self.lower_closed:
            if not self.lower <= b:
                return False
        elif not self.lower < b:
            return False
        return self.upper > b


_D4_THRESHOLD_LOW = Radical(Fraction(34), Fraction(-12), Fraction(5))
_D4_THRESHOLD_HIGH = Radical(Fraction(34), Fraction(12), Fraction(5))
_D5_THRESHOLD_LOW = Radical(Fraction(89), Fraction(-60), Fraction(2))
_D5_THRESHOLD_HIGH = Radical(Fraction(89), Fraction(60), Fraction(2))

# squared real-part bounds: (2*sqrt(5)+1)/4 at degree 4, 8/7 at degree 5
_D4_BOUND_SQ = Radical(Fraction(1, 4), Fraction(1, 2), Fraction(5))
_D5_BOUND_SQ = Radical(Fraction(8, 7))


def real_part_bound(d: int) -> float:
    """Float view of the complex-regime bound on |Re(root) + 1/2|."""
    sq = _bound_squared(d)
    return math.sqrt(float(sq))


def _bound_squared(d: int) -> Radical:
    if d == 4:
        return _D4_BOUND_SQ
    if d == 5:
        return _D5_BOUND_SQ
    raise ValueError("family analysis is defined for degrees 4 and 5 only")


def family_delta(b, c, d: int) -> DeltaVector:
    b, c = Fraction(b), Fraction(c)
    if d == 4:
        return validate_delta((1, b, c, b, 1))
    if d == 5:
        return validate_delta((1, b, c, c, b, 1))
    raise ValueError("family analysis is defined for degrees 4 and 5 only")


def admissible_b_interval(d: int, c) -> BInterval | None:
    """Exact open b-range where the reduced quadratic goes complex, or None
    when c sits at or below the regime threshold."""
    c = Fraction(c)
    if c < 0:
        raise ValueError("c must be nonnegative")
    if d == 4:
        low, high = _D4_THRESHOLD_LOW, _D4_THRESHOLD_HIGH
        center, spread, radicand = (c - 16) / 4, Fraction(6, 4), c - 5
    elif d == 5:
        low, high = _D5_THRESHOLD_LOW, _D5_THRESHOLD_HIGH
        center, spread, radicand = (3 * c - 67) / 27, Fraction(20, 27), 3 * c - 5
    else:
        raise ValueError("family analysis is defined for degrees 4 and 5 only")
    if not low < c:
        return None
    upper = Radical(center, spread, radicand)
    if high >= c:
        return BInterval(Radical(Fraction(0)), upper, lower_closed=True)
    return BInterval(Radical(center, -spread, radicand), upper, lower_closed=False)


@dataclass(frozen=True)
class QuarticAnalysis:
    """Exact record of the even-part reduction for one (b, c) family point.

    `quadratic_coeffs` are the exact (X^2, X, 1) coefficients of the reduced
    quadratic; when the regime is complex, `root_modulus` is |root|,
    `root_real_part` its exact-rational real part, and `real_part_magnitude`
    the induced |Re + 1/2| of the original roots, all as floats alongside the
    exact pass verdict."""

    b: Fraction
    c: Fraction
    d: int
    quadratic_coeffs: tuple[Fraction, Fraction, Fraction]
    discriminant: Fraction
    region: str
    root_modulus: float | None
    root_real_part: float | None
    real_part_magnitude: float | None
    bound: float | None
    passed: bool


def quartic_analysis(b, c, d: int) -> QuarticAnalysis:
    """Classify a family point and verify the complex-regime bound exactly.

    The reduced quadratic is computed through the generic pipeline
    (delta expansion, half shift, parity reduction), not from pasted
    formulas, so the coefficients double as a consistency check."""
    b, c = Fraction(b), Fraction(c)
    if b < 0 or c < 0:
        raise ValueError("family parameters must be nonnegative")
    v = family_delta(b, c, d)
    g = half_shift(from_delta(v))
    reduced, parity, _factor = parity_reduce(g)
    if d == 5:
        assert parity == "odd"
    a2, a1, a0 = (
        reduced.coefficients[2],
        reduced.coefficients[1],
        reduced.coefficients[0],
    )
    disc = a1 * a1 - 4 * a2 * a0

    if disc >= 0:
        return QuarticAnalysis(
            b=b, c=c, d=d,
            quadratic_coeffs=(a2, a1, a0),
            discriminant=disc,
            region="real_regime",
            root_modulus=None,
            root_real_part=None,
            real_part_magnitude=None,
            bound=None,
            passed=True,
        )

    interval = admissible_b_interval(d, c)
    if interval is None or not interval.contains(b):
        # unreachable when the discriminant sign and region algebra agree
        region = "inadmissible"
    else:
        high = _D4_THRESHOLD_HIGH if d == 4 else _D5_THRESHOLD_HIGH
        region = "first_complex_regime" if high >= c else "second_complex_regime"

    modulus_sq = a0 / a2  # |root|^2 = product of the conjugate pair
    real_part = -a1 / (2 * a2)  # exact rational
    bound_sq = _bound_squared(d)

    # exact verdict: sqrt((r + r cos theta)/2) <= bound
    #   <=>  r <= 2*bound^2 - r cos theta  (both sides nonnegative)
    rhs = 2 * bound_sq - Radical(real_part)
    passed = rhs.sign() >= 0 and rhs * rhs >= modulus_sq

    with mp.mp.workprec(256):
        r_f = mp.sqrt(mp.mpf(modulus_sq.numerator) / mp.mpf(modulus_sq.denominator))
        rc_f = mp.mpf(real_part.numerator) / mp.mpf(real_part.denominator)
        rpm = mp.sqrt((r_f + rc_f) / 2)
        return QuarticAnalysis(
            b=b, c=c, d=d,
            quadratic_coeffs=(a2, a1, a0),
            discriminant=disc,
            region=region,
            root_modulus=float(r_f),
            root_real_part=float(rc_f),
            real_part_magnitude=float(rpm),
            bound=real_part_bound(d),
            passed=passed and region != "inadmissible",
        )
