"""Complex root location by simultaneous Aberth-Ehrlich iteration.

The solver keeps everything in configurable binary precision: at exactly 53
bits it runs on hardware complex doubles, above that on mpmath big floats.
Denominators are cleared and coefficients rescaled before iterating, initial
guesses sit on a Cauchy-bound circle centered at -1/2 (the symmetry center of
every polynomial this package builds) with golden-ratio angle spacing to
break conjugate-symmetric stalls, and results are deterministic for a fixed
configuration.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace
from fractions import Fraction

import mpmath as mp

from .errors import (
    AmbiguousClassificationError,
    DegenerateInputError,
    NoConvergenceError,
)
from .polynomial import RationalPolynomial, clear_denominators, to_mpc
from .radicals import QuadraticRoots, solve_quadratic
from .sturm import cauchy_bound, count_real_roots, sturm_sequence

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class SolverConfig:
    precision_bits: int = 128
    max_iterations: int = 200
    convergence_factor: Fraction | None = None  # None: 2^(-precision_bits/2)

    def __post_init__(self):
        if self.precision_bits < 53:
            raise ValueError("precision_bits must be >= 53")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")

    @property
    def tolerance(self) -> Fraction:
        if self.convergence_factor is not None:
            return Fraction(self.convergence_factor)
        return Fraction(1, 2 ** (self.precision_bits // 2))


@dataclass(frozen=True)
class ComplexRoot:
    """One located root with its numeric quality metadata.

    `re`/`im` are mpf values at the solver's working precision.  `residual`
    is the coefficient-scaled |p(z)|, `error_radius` an a-posteriori inclusion
    radius (degree * |p/p'| style, inflated across near-coincident clusters).
    """

    re: mp.mpf
    im: mp.mpf
    residual: float
    error_radius: float
    is_real_certified: bool = False

    def as_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def is_near_real(self, floor: float = 0.0) -> bool:
        return abs(float(self.im)) <= max(self.error_radius, floor)


@dataclass(frozen=True)
class RootSet:
    roots: tuple[ComplexRoot, ...]
    degree: int
    precision_bits: int

    def as_complex_list(self) -> list[complex]:
        return [r.as_complex() for r in self.roots]

    def certified_real(self) -> list[ComplexRoot]:
        return [r for r in self.roots if r.is_real_certified]


def _mpf_to_fraction(x) -> Fraction:
    if isinstance(x, (int, float)):
        return Fraction(x)
    # read the mantissa tuple directly: mp.mpf(x) would re-round to the
    # ambient context and silently discard precision
    sign, man, exp, _ = x._mpf_
    if man == 0:
        return Fraction(0)
    value = Fraction(int(man)) * Fraction(2) ** exp
    return -value if sign else value


def _initial_points(n: int, radius: float) -> list[complex]:
    points = []
    for j in range(n):
        theta = 2.0 * math.pi * (((j + 1) * _GOLDEN) % 1.0)
        points.append(complex(-0.5, 0.0) + radius * cmath.exp(1j * theta))
    return points


def _aberth_iterate(coeffs, dcoeffs, points, tol, one, max_iterations, stall_tol):
    """Generic simultaneous iteration; `coeffs` lead-first in the point type.

    Converges when every relative correction drops below `tol`, or when the
    corrections are already below `stall_tol` and stop halving: a root of
    multiplicity m cannot be located beyond ~precision/m bits, so clusters
    plateau at a noise floor well above `tol` (their inflated error radii
    stay honest)."""
    n = len(points)
    converged = False
    best = None
    since_improvement = 0
    for _ in range(max_iterations):
        max_rel = None
        for j in range(n):
            z = points[j]
            pv = coeffs[0]
            for c in coeffs[1:]:
                pv = pv * z + c
            if pv == 0:
                continue
            pd = dcoeffs[0]
            for c in dcoeffs[1:]:
                pd = pd * z + c
            s = 0 * one
            for k in range(n):
                if k == j:
                    continue
                diff = z - points[k]
                if diff == 0:
                    diff = tol * one + 0 * z  # coincident guesses: tiny split
                s += one / diff
            denom = pd - pv * s
            if denom == 0:
                w = pv / (pd if pd != 0 else one)
            else:
                w = pv / denom
            points[j] = z - w
            scale = abs(points[j])
            rel = abs(w) / (scale if scale > 1 else one)
            if max_rel is None or rel > max_rel:
                max_rel = rel
        if max_rel is None or max_rel < tol:
            converged = True
            break
        if best is None or max_rel < 0.5 * best:
            since_improvement = 0
        else:
            since_improvement += 1
        if best is None or max_rel < best:
            best = max_rel
        if since_improvement >= 20 and best < stall_tol:
            converged = True
            break
    return points, converged


def residual(p: RationalPolynomial, z, precision_bits: int = 128) -> float:
    """Coefficient-scaled residual |p(z)| / (1 + sum |a_k| |z|^k)."""
    with mp.mp.workprec(precision_bits):
        zc = to_mpc(z)
        value = abs(p.evaluate_complex(zc, precision_bits))
        az = abs(zc)
        denom = mp.mpf(1)
        power = mp.mpf(1)
        for c in p.coefficients:
            denom += abs(mp.mpf(c.numerator) / mp.mpf(c.denominator)) * power
            power *= az
        return float(value / denom)


def _error_radius(n, pv, pd, fallback: float) -> float:
    if pd == 0:
        return fallback
    return float(n * abs(pv / pd))


def find_roots(p: RationalPolynomial, cfg: SolverConfig | None = None) -> RootSet:
    """Locate all complex roots of p at the configured precision.

    Returns degree-many roots sorted by (re, im); conjugate symmetry is
    enforced by an averaging post-pass, near-coincident roots share an
    inflated error radius.  Raises DegenerateInputError for constants and
    NoConvergenceError (partial results attached) at the iteration cap.
    """
    cfg = cfg or SolverConfig()
    n = p.degree
    if n < 1:
        raise DegenerateInputError("cannot solve a constant polynomial")

    ints, _ = clear_denominators(p)
    scale = max(abs(c) for c in ints)
    radius = float(cauchy_bound(p))
    starts = _initial_points(n, radius)
    bits = cfg.precision_bits
    tol_fr = cfg.tolerance
    stall_tol = 2.0 ** (-bits / 6.0)

    if bits == 53:
        coeffs = [int(c) / scale for c in reversed(ints)]
        dcoeffs = [c * k / scale for k, c in list(enumerate(ints))[:0:-1]]
        points = list(starts)
        tol = float(tol_fr)
        one = 1.0
        points, ok = _aberth_iterate(
            coeffs, dcoeffs, points, tol, one, cfg.max_iterations, stall_tol
        )
        final = [mp.mpc(z) for z in points]
    else:
        with mp.mp.workprec(bits + 16):
            inv = mp.mpf(1) / mp.mpf(scale)
            coeffs = [mp.mpc(c) * inv for c in reversed(ints)]
            dcoeffs = [mp.mpc(c * k) * inv for k, c in list(enumerate(ints))[:0:-1]]
            points = [mp.mpc(z) for z in starts]
            tol = mp.mpf(tol_fr.numerator) / mp.mpf(tol_fr.denominator)
            one = mp.mpf(1)
            points, ok = _aberth_iterate(
                coeffs, dcoeffs, points, tol, one, cfg.max_iterations, stall_tol
            )
            final = list(points)

    rootset = _finalize(p, final, n, cfg)
    if not ok:
        raise NoConvergenceError(
            f"no convergence within {cfg.max_iterations} iterations", partial=rootset
        )
    return rootset


def _finalize(p, points, n, cfg: SolverConfig) -> RootSet:
    bits = cfg.precision_bits
    with mp.mp.workprec(bits + 16):
        points = _pair_conjugates(points, float(cfg.tolerance))
        dp = p.derivative()
        fallback = 2.0 * float(cauchy_bound(p))
        roots = []
        for z in points:
            pv = p.evaluate_complex(z, bits)
            pd = dp.evaluate_complex(z, bits)
            roots.append(
                ComplexRoot(
                    re=z.real,
                    im=z.imag,
                    residual=residual(p, z, bits),
                    error_radius=_error_radius(n, pv, pd, fallback),
                )
            )
        roots = _inflate_clusters(roots, bits)
        # sort on the float view so reported ordering matches what users see;
        # sub-double residue in re would otherwise scramble apparent ties
        roots.sort(key=lambda r: (float(r.re), float(r.im)))
    return RootSet(roots=tuple(roots), degree=n, precision_bits=bits)


def _pair_conjugates(points, tol: float):
    """Average mirror partners so the multiset is exactly conjugate-closed."""
    points = list(points)
    order = sorted(range(len(points)), key=lambda i: -abs(float(points[i].imag)))
    used = set()
    for i in order:
        zi = points[i]
        if i in used or float(zi.imag) <= 0 or abs(float(zi.imag)) <= tol:
            continue
        best, best_dist = None, None
        for j in range(len(points)):
            if j == i or j in used or float(points[j].imag) >= 0:
                continue
            dist = abs(zi - mp.conj(points[j]))
            if best is None or dist < best_dist:
                best, best_dist = j, dist
        if best is None:
            continue
        avg = (zi + mp.conj(points[best])) / 2
        points[i] = avg
        points[best] = mp.conj(avg)
        used.update((i, best))
    return points


def _inflate_clusters(roots: list[ComplexRoot], bits: int) -> list[ComplexRoot]:
    threshold = 2.0 ** (-bits / 4.0)
    n = len(roots)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        zi = mp.mpc(roots[i].re, roots[i].im)
        for j in range(i + 1, n):
            zj = mp.mpc(roots[j].re, roots[j].im)
            if abs(zi - zj) < threshold:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    out = list(roots)
    for members in groups.values():
        if len(members) == 1:
            continue
        diameter = 0.0
        for a in members:
            za = mp.mpc(roots[a].re, roots[a].im)
            for b in members:
                zb = mp.mpc(roots[b].re, roots[b].im)
                diameter = max(diameter, float(abs(za - zb)))
        shared = max([diameter] + [roots[a].error_radius for a in members])
        for a in members:
            out[a] = replace(roots[a], error_radius=shared)
    return out


def classify_roots(rs: RootSet, p: RationalPolynomial) -> RootSet:
    """Certify which roots are real, by exact sign-count brackets.

    A candidate (|im| within its error radius, or below the precision floor)
    is bracketed by a rational interval around its real part; a count of one
    certifies it and snaps im to zero, a count of zero leaves it complex.
    Brackets that cannot isolate shrink a few times before raising
    AmbiguousClassificationError.
    """
    chain = sturm_sequence(p)
    floor = 2.0 ** (-rs.precision_bits / 2.0)
    out = []
    for root in rs.roots:
        im_abs = abs(float(root.im))
        magnitude = 1.0 + abs(float(root.re))
        if im_abs > max(root.error_radius, floor * magnitude):
            out.append(replace(root, is_real_certified=False))
            continue
        center = _mpf_to_fraction(root.re)
        rho = Fraction(
            max(
                root.error_radius,
                2.0 * im_abs,
                floor * magnitude,
            )
        )
        certified = None
        for _ in range(8):
            count = count_real_roots(chain, center - rho, center + rho)
            if count == 1:
                certified = True
                break
            if count == 0:
                certified = False
                break
            rho /= 4
        if certified is None:
            raise AmbiguousClassificationError(
                f"cannot isolate candidate near {float(center)}"
            )
        if certified:
            out.append(replace(root, im=mp.mpf(0), is_real_certified=True))
        else:
            out.append(replace(root, is_real_certified=False))
    out.sort(key=lambda r: (float(r.re), float(r.im)))
    return RootSet(roots=tuple(out), degree=rs.degree, precision_bits=rs.precision_bits)


def quadratic_roots_exact(a2, a1, a0) -> QuadraticRoots:
    """Exact radical roots of a quadratic (see radicals.solve_quadratic)."""
    return solve_quadratic(Fraction(a2), Fraction(a1), Fraction(a0))


def newton_polish(p: RationalPolynomial, z, steps: int, precision_bits: int = 256):
    """Newton refinement trace: [(z0, residual0), (z1, residual1), ...]."""
    dp = p.derivative()
    trace = []
    with mp.mp.workprec(precision_bits):
        zc = mp.mpc(z)
        for _ in range(steps + 1):
            trace.append((zc, residual(p, zc, precision_bits)))
            pd = dp.evaluate_complex(zc, precision_bits)
            if pd == 0:
                break
            zc = zc - p.evaluate_complex(zc, precision_bits) / pd
    return trace
