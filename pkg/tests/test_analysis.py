"""Strip/norm verdicts and the exact discriminant-region analysis."""

import math
import random
from fractions import Fraction as F

import pytest

from deltaroots import (
    admissible_b_interval,
    classify_roots,
    find_roots,
    from_delta,
    norm_check,
    norm_disk_radius,
    quartic_analysis,
    strip_check,
    validate_delta,
)
from deltaroots.analysis import family_delta, real_part_bound, strip_bounds
from deltaroots.errors import InconclusiveCheckError
from deltaroots.sampling import random_admissible_point, random_symmetric_delta


class TestStripBounds:
    def test_kinds(self):
        assert strip_bounds("full_strip", 5) == (F(-5), F(4))
        assert strip_bounds("half_strip", 5) == (F(-5, 2), F(3, 2))
        assert strip_bounds("floor_strip", 5) == (F(-2), F(1))

    def test_half_equals_floor_for_even(self):
        assert strip_bounds("half_strip", 8) == strip_bounds("floor_strip", 8)


class TestStripCheck:
    def test_degree8_half_strip_fails_with_published_margin(self):
        p = from_delta(validate_delta((1, 0, 0, 0, 14, 0, 0, 0, 1)))
        rs = find_roots(p)
        check = strip_check(rs, 8, "half_strip", p)
        assert not check.passed
        viol = {(round(float(r.re), 8), round(float(r.im), 8)) for r in check.violators}
        assert (3.00099518, 5.29723208) in viol
        assert (-4.00099518, 5.29723208) in viol
        assert len(check.violators) == 4
        assert min(check.margins) == pytest.approx(-0.00099518, abs=1e-8)

    def test_degree10_half_strip_fails(self):
        p = from_delta(validate_delta((1, 1, 1, 1, 1, 23, 1, 1, 1, 1, 1)))
        rs = find_roots(p)
        check = strip_check(rs, 10, "half_strip", p)
        assert not check.passed
        assert any(
            abs(float(r.re) - 4.02470021) < 1e-6 and abs(float(r.im)) > 8
            for r in check.violators
        )

    def test_degree8_full_strip_passes(self):
        p = from_delta(validate_delta((1, 0, 0, 0, 14, 0, 0, 0, 1)))
        rs = find_roots(p)
        assert strip_check(rs, 8, "full_strip", p).passed

    def test_low_degree_symmetric_always_passes_half(self):
        rng = random.Random(4)
        for _ in range(30):
            d = rng.randint(2, 5)
            v = random_symmetric_delta(rng, d)
            p = from_delta(v)
            rs = find_roots(p)
            assert strip_check(rs, d, "half_strip", p).passed

    def test_boundary_roots_resolve_exactly(self):
        # C(n+2,4): real roots exactly at both floor-strip bounds
        p = from_delta(validate_delta((0, 0, 1, 0, 0)))
        rs = classify_roots(find_roots(p), p)
        check = strip_check(rs, 4, "floor_strip", p)
        assert check.passed
        assert check.margins.count(0.0) == 2

    def test_boundary_root_without_polynomial_is_inconclusive(self):
        p = from_delta(validate_delta((0, 0, 1, 0, 0)))
        rs = classify_roots(find_roots(p), p)
        with pytest.raises(InconclusiveCheckError):
            strip_check(rs, 4, "floor_strip")


class TestNormCheck:
    def test_radius_values(self):
        assert norm_disk_radius(4) == 14
        assert norm_disk_radius(5) == F(45, 2)
        assert norm_disk_radius(2) == 3

    def test_dim2_family_max_distance(self):
        # worst case over b in 0..7 is sqrt(3)/2 at b=0
        worst = 0.0
        for b in range(0, 8):
            p = from_delta(validate_delta((1, b, 1)))
            rs = find_roots(p)
            check = norm_check(rs, 2)
            assert check.passed
            for z in rs.as_complex_list():
                worst = max(worst, abs(z + 0.5))
        assert worst == pytest.approx(math.sqrt(3) / 2, abs=1e-12)

    def test_counterexample_inside_disk(self):
        p = from_delta(validate_delta((1, 0, 0, 0, 14, 0, 0, 0, 1)))
        rs = find_roots(p)
        check = norm_check(rs, 8)
        assert check.passed
        assert check.radius == F(60)
        assert "extrapolated" in check.note


class TestQuarticAnalysis:
    def test_d4_complex_point(self):
        qa = quartic_analysis(0, 36, 4)
        assert qa.region == "first_complex_regime"
        assert qa.discriminant == -2864
        assert qa.root_modulus == pytest.approx(0.9372, abs=5e-5)
        assert qa.real_part_magnitude < math.sqrt(qa.root_modulus) < 1.5
        assert qa.passed

    def test_d4_real_regime(self):
        qa = quartic_analysis(0, 0, 4)
        assert qa.region == "real_regime"
        assert qa.discriminant > 0
        assert qa.passed
        assert qa.real_part_magnitude is None

    def test_d5_bound_attained_at_corner(self):
        # (b, c) = (0, 41) maximizes the degree-5 magnitude: exactly 2*sqrt(14)/7
        qa = quartic_analysis(0, 41, 5)
        assert qa.region == "first_complex_regime"
        assert qa.root_modulus == pytest.approx(1.75)
        assert qa.real_part_magnitude == pytest.approx(2 * math.sqrt(14) / 7, abs=1e-12)
        assert qa.passed

    def test_pipeline_matches_published_discriminant_form(self):
        rng = random.Random(8)
        for _ in range(25):
            b = F(rng.randint(0, 50), rng.randint(1, 9))
            c = F(rng.randint(0, 200), rng.randint(1, 9))
            qa4 = quartic_analysis(b, c, 4)
            assert qa4.discriminant == 4 * (
                16 * b * b - 8 * (c - 16) * b + c * c - 68 * c + 436
            )
            qa5 = quartic_analysis(b, c, 5)
            assert qa5.discriminant == 16 * (
                81 * b * b - 6 * (3 * c - 67) * b + c * c - 178 * c + 721
            )

    def test_bound_floats(self):
        assert real_part_bound(4) == pytest.approx(math.sqrt(2 * math.sqrt(5) + 1) / 2)
        assert real_part_bound(5) == pytest.approx(2 * math.sqrt(14) / 7)


class TestAdmissibleInterval:
    def test_d4_below_threshold_is_empty(self):
        assert admissible_b_interval(4, 5) is None

    def test_d4_two_sided_branch(self):
        interval = admissible_b_interval(4, 100)
        assert not interval.lower_closed
        assert interval.lower.p == F(84, 4) and interval.lower.m == 95
        assert interval.upper.q == F(6, 4)
        assert not interval.contains(F(1))
        assert interval.contains(F(30))

    def test_d5_first_branch_at_89(self):
        interval = admissible_b_interval(5, 89)
        assert interval.lower_closed
        assert interval.lower.p == 0
        assert interval.upper.p == F(3 * 89 - 67, 27)
        assert interval.upper.m == 262
        assert interval.contains(F(0))

    def test_membership_matches_discriminant_sign(self):
        rng = random.Random(12)
        for d in (4, 5):
            for _ in range(60):
                b = F(rng.randint(0, 60), rng.randint(1, 7))
                c = F(rng.randint(0, 250), rng.randint(1, 7))
                qa = quartic_analysis(b, c, d)
                interval = admissible_b_interval(d, c)
                inside = interval is not None and interval.contains(b)
                assert inside == (qa.discriminant < 0)


class TestCrossAgreement:
    def test_regions_agree_with_root_finder(self):
        rng = random.Random(21)
        for d in (4, 5):
            for _ in range(12):
                b, c = random_admissible_point(rng, d)
                qa = quartic_analysis(b, c, d)
                assert qa.region.endswith("complex_regime")
                assert qa.passed
                p = from_delta(family_delta(b, c, d))
                rs = classify_roots(find_roots(p), p)
                expected_real = 0 if d == 4 else 1
                assert len(rs.certified_real()) == expected_real
                check = strip_check(rs, d, "half_strip", p)
                assert check.passed == qa.passed
                # independent magnitude agreement
                worst = max(abs(float(r.re) + 0.5) for r in rs.roots)
                assert worst <= qa.real_part_magnitude + 1e-9

    def test_d5_always_contains_minus_half(self):
        rng = random.Random(33)
        for _ in range(8):
            b, c = random_admissible_point(rng, 5)
            p = from_delta(family_delta(b, c, 5))
            assert p.evaluate(F(-1, 2)) == 0
            rs = classify_roots(find_roots(p), p)
            assert any(
                r.is_real_certified and float(r.re) == pytest.approx(-0.5, abs=1e-30)
                for r in rs.roots
            )
