"""Root solver behavior: published values, symmetry closure, residuals."""

import math
import random
from fractions import Fraction as F

import mpmath as mp
import pytest

from deltaroots import (
    SolverConfig,
    classify_roots,
    find_roots,
    from_delta,
    quadratic_roots_exact,
    residual,
    validate_delta,
)
from deltaroots.errors import DegenerateInputError
from deltaroots.polynomial import RationalPolynomial, binomial_basis
from deltaroots.roots import newton_polish
from deltaroots.sampling import random_symmetric_delta

D8_EXPECTED = [
    (-4.00099518, -5.29723208),
    (-4.00099518, 5.29723208),
    (-0.5, -1.78738687),
    (-0.5, 1.78738687),
    (-0.5, -0.44480014),
    (-0.5, 0.44480014),
    (3.00099518, -5.29723208),
    (3.00099518, 5.29723208),
]


def assert_matches(rootset, expected, tol):
    got = rootset.as_complex_list()
    for ex, ey in expected:
        assert any(abs(z - complex(ex, ey)) < tol for z in got), (ex, ey)


class TestFindRoots:
    def test_degree8_counterexample_published_roots(self):
        p = from_delta(validate_delta((1, 0, 0, 0, 14, 0, 0, 0, 1)))
        rs = find_roots(p)
        assert rs.degree == 8 and len(rs.roots) == 8
        assert_matches(rs, D8_EXPECTED, 1e-6)

    def test_binomial_roots(self):
        rs = find_roots(binomial_basis(2, 0))
        got = sorted(float(r.re) for r in rs.roots)
        assert got == pytest.approx([-2.0, -1.0], abs=1e-15)

    def test_degree10_candidate_contains_published_root(self):
        p = from_delta(validate_delta((1, 1, 1, 1, 1, 23, 1, 1, 1, 1, 1)))
        rs = find_roots(p)
        target = complex(4.02470021, 8.22732653)
        assert any(abs(z - target) < 1e-6 for z in rs.as_complex_list())

    def test_constant_rejected(self):
        with pytest.raises(DegenerateInputError):
            find_roots(RationalPolynomial((F(3),)))

    def test_deterministic_for_fixed_config(self):
        p = from_delta(validate_delta((1, 2, 5, 2, 1)))
        a = find_roots(p).as_complex_list()
        b = find_roots(p).as_complex_list()
        assert a == b

    def test_double_precision_path(self):
        cfg = SolverConfig(precision_bits=53)
        p = from_delta(validate_delta((1, 0, 0, 0, 14, 0, 0, 0, 1)))
        rs = find_roots(p, cfg)
        assert_matches(rs, D8_EXPECTED, 1e-6)

    def test_roots_sorted_by_re_then_im(self):
        p = from_delta(validate_delta((1, 1, 1, 1, 1, 23, 1, 1, 1, 1, 1)))
        keys = [(float(r.re), float(r.im)) for r in find_roots(p).roots]
        assert keys == sorted(keys)


class TestSymmetryClosure:
    def test_conjugate_closure(self):
        p = from_delta(validate_delta((1, 3, 7, 3, 1)))
        roots = find_roots(p).as_complex_list()
        for z in roots:
            assert any(abs(z.conjugate() - w) < 1e-25 for w in roots)

    def test_mirror_closure_for_symmetric_vectors(self):
        rng = random.Random(2)
        for _ in range(10):
            v = random_symmetric_delta(rng, rng.randint(2, 9))
            roots = find_roots(from_delta(v)).as_complex_list()
            for z in roots:
                assert any(abs((-1 - z.conjugate()).conjugate() - w) < 1e-20 for w in roots)

    def test_odd_degree_has_minus_half(self):
        rng = random.Random(9)
        for _ in range(8):
            v = random_symmetric_delta(rng, rng.choice([3, 5, 7]))
            p = from_delta(v)
            assert p.evaluate(F(-1, 2)) == 0
            rs = classify_roots(find_roots(p), p)
            assert any(
                r.is_real_certified and abs(float(r.re) + 0.5) < 1e-30
                for r in rs.roots
            )

    def test_reconstruction_from_roots(self):
        p = from_delta(validate_delta((1, 0, 0, 0, 14, 0, 0, 0, 1)))
        rs = find_roots(p)
        with mp.mp.workprec(200):
            prod = mp.mpc(1)
            for r in rs.roots:
                prod *= mp.mpc(0) - mp.mpc(r.re, r.im)
            constant = prod * mp.mpf(p.leading_coefficient.numerator) / mp.mpf(
                p.leading_coefficient.denominator
            )
            # p(0) = 1; reconstruction error far below the spec bound
            assert abs(constant - 1) < rs.degree * 2.0 ** (-rs.precision_bits / 2)


class TestClassification:
    def test_binomial_roots_all_real(self):
        p = binomial_basis(2, 0)
        rs = classify_roots(find_roots(p), p)
        assert all(r.is_real_certified for r in rs.roots)

    def test_counterexample_has_no_real_roots(self):
        p = from_delta(validate_delta((1, 0, 0, 0, 14, 0, 0, 0, 1)))
        rs = classify_roots(find_roots(p), p)
        assert rs.certified_real() == []

    def test_dim3_b35_three_real_including_half(self):
        p = from_delta(validate_delta((1, 35, 35, 1)))
        rs = classify_roots(find_roots(p), p)
        assert len(rs.certified_real()) == 3
        assert any(float(r.re) == -0.5 for r in rs.roots)

    def test_double_root_cluster_certified(self):
        p = from_delta(validate_delta((1, 6, 1)))
        rs = classify_roots(find_roots(p), p)
        assert all(r.is_real_certified for r in rs.roots)
        assert all(float(r.re) == pytest.approx(-0.5, abs=1e-18) for r in rs.roots)


class TestExactQuadraticAgreement:
    @pytest.mark.parametrize("b", range(0, 8))
    def test_catalog_quadratics(self, b):
        # simple roots agree to 1e-32 at 128 bits; the b=6 double root is
        # limited by its cluster radius (clusters are reported, not refined)
        p = from_delta(validate_delta((1, b, 1)))
        rs = find_roots(p)
        exact = quadratic_roots_exact(b + 2, b + 2, 2)
        with mp.mp.workprec(200):
            lo, hi = exact.evaluate(200)
            for target in (lo, hi):
                best = min(
                    (abs(mp.mpc(r.re, r.im) - target), r) for r in rs.roots
                )
                dist, root = best
                tol = max(1e-32, 4 * root.error_radius)
                assert dist < tol

    def test_high_precision_agreement(self):
        # at 128 bits the solver should agree with the radical form to 1e-32
        p = from_delta(validate_delta((1, 9, 1)))
        rs = find_roots(p)
        exact = quadratic_roots_exact(11, 11, 2)
        with mp.mp.workprec(200):
            lo, hi = exact.evaluate(200)
            for r in rs.roots:
                z = mp.mpc(r.re, r.im)
                assert min(abs(z - lo), abs(z - hi)) < mp.mpf(10) ** -32


class TestResidual:
    def test_zero_at_true_rational_root(self):
        p = from_delta(validate_delta((1, 7, 1)))
        assert residual(p, F(-2, 3)) < 1e-37

    def test_positive_at_origin(self):
        # at z = 0 only the constant term feeds the scale: |p(0)|/(1 + |a0|)
        p = from_delta(validate_delta((1, 7, 1)))
        r = residual(p, 0)
        assert r > 0
        assert r == pytest.approx(0.5)

    def test_decreasing_along_newton_polish(self):
        p = from_delta(validate_delta((1, 0, 0, 0, 14, 0, 0, 0, 1)))
        trace = newton_polish(p, complex(3.00099518, 5.29723208), steps=4, precision_bits=256)
        residuals = [t[1] for t in trace]
        floor = 1e-60
        for before, after in zip(residuals, residuals[1:]):
            if before < floor:
                break
            assert after < before
