"""Sturm chains, exact root counting, and the real-strip certificate."""

import random
from fractions import Fraction as F

import pytest

from deltaroots import (
    RationalPolynomial,
    cauchy_bound,
    certify_real_strip,
    count_real_roots,
    from_delta,
    sturm_sequence,
    validate_delta,
)
from deltaroots.polynomial import binomial_basis
from deltaroots.sampling import random_symmetric_delta
from deltaroots.sturm import count_real_roots_outside, squarefree_part


def poly(*coeffs):
    return RationalPolynomial(tuple(F(c) for c in coeffs))


class TestChain:
    def test_two_sign_changes_across_unit_roots(self):
        chain = sturm_sequence(poly(-1, 0, 1))
        assert count_real_roots(chain, F(-2), F(2)) == 2

    def test_binomial_has_two_roots_in_window(self):
        chain = sturm_sequence(binomial_basis(2, 0))  # roots -1, -2
        assert count_real_roots(chain, F(-3), F(0)) == 2

    def test_degree8_counterexample_has_no_real_roots(self):
        p = from_delta(validate_delta((1, 0, 0, 0, 14, 0, 0, 0, 1)))
        chain = sturm_sequence(p)
        assert count_real_roots(chain, F(-100), F(100)) == 0

    def test_chain_ends_in_constant_for_squarefree(self):
        chain = sturm_sequence(poly(-1, 0, 1))
        assert len(chain.polynomials[-1]) == 1

    def test_multiple_roots_flagged_and_collapsed(self):
        p = poly(1, 2, 1)  # (n+1)^2
        sf, multiple = squarefree_part(p)
        assert multiple
        assert sf in ((1, 1), (-1, -1))
        chain = sturm_sequence(p)
        assert chain.had_multiple_roots
        assert count_real_roots(chain, F(-3), F(3)) == 1


class TestCounting:
    def test_catalog_b7_roots_in_unit_interval(self):
        chain = sturm_sequence(from_delta(validate_delta((1, 7, 1))))
        assert count_real_roots(chain, F(-1), F(0)) == 2

    def test_half_open_orientation_at_endpoints(self):
        chain = sturm_sequence(poly(-1, 0, 1))  # roots -1, 1
        assert count_real_roots(chain, F(-1), F(1)) == 1  # -1 excluded, 1 included
        assert count_real_roots(chain, F(-2), F(-1)) == 1
        assert count_real_roots(chain, F(1), F(2)) == 0

    def test_cauchy_bound_contains_roots(self):
        p = from_delta(validate_delta((1, 0, 0, 0, 14, 0, 0, 0, 1)))
        bound = cauchy_bound(p)
        # largest |root| is about 6.6
        assert bound > 6

    def test_outside_count_with_boundary_root(self):
        p = poly(-1, 0, 1)  # roots at -1 and 1
        assert count_real_roots_outside(p, F(-1), F(1)) == 0
        assert count_real_roots_outside(p, F(-1, 2), F(1)) == 1
        assert count_real_roots_outside(p, F(-2), F(0)) == 1


class TestCertifyRealStrip:
    def test_pure_binomial_hits_both_endpoints(self):
        # C(n+2,4): roots exactly {-2,-1,0,1} with strip [-2, 1]
        cert = certify_real_strip(validate_delta((0, 0, 1, 0, 0)))
        assert cert.passed
        assert cert.lower == -2 and cert.upper == 1

    def test_degree8_counterexample_passes_vacuously(self):
        cert = certify_real_strip(validate_delta((1, 0, 0, 0, 14, 0, 0, 0, 1)))
        assert cert.passed  # no real roots at all

    def test_degree1_degenerate_interval(self):
        cert = certify_real_strip(validate_delta((1, 1)))
        assert cert.passed
        assert cert.lower == cert.upper == F(-1, 2)

    def test_random_symmetric_never_fails(self):
        rng = random.Random(11)
        for _ in range(60):
            d = rng.randint(2, 14)
            v = random_symmetric_delta(rng, d, allow_zero_head=(rng.random() < 0.3))
            cert = certify_real_strip(v)
            assert cert.passed, v.entries

    def test_partition_of_degree(self):
        # distinct real roots + conjugate pairs account for the whole degree
        from deltaroots import classify_roots, find_roots

        rng = random.Random(5)
        for _ in range(12):
            d = rng.randint(2, 8)
            v = random_symmetric_delta(rng, d)
            p = from_delta(v)
            sf, multiple = squarefree_part(p)
            if multiple:
                continue
            chain = sturm_sequence(p)
            bound = cauchy_bound(p) + 1
            reals = count_real_roots(chain, -bound, bound)
            rs = classify_roots(find_roots(p), p)
            nonreal = sum(1 for r in rs.roots if not r.is_real_certified)
            assert reals + nonreal == p.degree
