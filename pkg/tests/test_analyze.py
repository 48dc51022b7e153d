import math
import random

import pytest

from ddseries.analyze import (
    SemigroupError,
    coefficient_bound_check,
    coefficient_extract,
    line_sup_estimate,
    semigroup_identify,
    series_evaluator,
    sup_monotonicity_check,
    three_lines_check,
)
from ddseries.double import embed_single, make_double_series
from ddseries.series import DirichletSeries, constant_series, make_series


def random_series(rng, max_index=16, n_terms=4):
    idx = rng.sample(range(1, max_index + 1), n_terms)
    return make_series(
        [(n, complex(rng.uniform(-1, 1), rng.uniform(-1, 1))) for n in idx], max_index
    )


def random_double(rng, bound=8, n_terms=4):
    pairs = set()
    while len(pairs) < n_terms:
        pairs.add((rng.randint(1, bound), rng.randint(1, bound)))
    return make_double_series(
        [(p, complex(rng.uniform(-1, 1), rng.uniform(-1, 1))) for p in sorted(pairs)],
        (bound, bound),
    )


class TestLineSup:
    def test_single_term(self):
        # |2^{-1-i tau}| = 1/2 for every height
        est = line_sup_estimate(make_series([(2, 1)], 4), 1.0)
        assert abs(est.value - 0.5) < 1e-6

    def test_constant(self):
        est = line_sup_estimate(constant_series(3j, 4), 2.0)
        assert abs(est.value - 3.0) < 1e-9

    def test_two_term_peak(self):
        # peak at tau = 0 where both terms align in phase
        est = line_sup_estimate(make_series([(1, 1), (2, 1)], 4), 0.5)
        assert abs(est.value - (1 + 2**-0.5)) < 1e-4

    def test_is_lower_bound_of_l1_translate(self):
        rng = random.Random(3)
        for _ in range(5):
            D = random_series(rng)
            sigma = rng.uniform(0.2, 2.0)
            l1 = sum(abs(a) * n**-sigma for n, a in D.terms.items())
            assert line_sup_estimate(D, sigma).value <= l1 + 1e-9

    def test_double_single_term(self):
        D = make_double_series([((2, 3), 1 + 0j)], (4, 4))
        est = line_sup_estimate(D, (1.0, 1.0), samples=100)
        assert abs(est.value - 1 / 6) < 1e-9

    def test_rejects_nonpositive_sigma(self):
        with pytest.raises(ValueError):
            line_sup_estimate(make_series([(2, 1)], 4), 0.0)


class TestSupMonotonicity:
    def test_strict_single_term(self):
        rep = sup_monotonicity_check(make_series([(2, 1)], 4), 0.5, 1.5)
        assert rep.nonstrict_holds
        assert rep.strictness == "strict"
        assert abs(rep.lower_sup.value - 2**-0.5) < 1e-6

    def test_constant_is_equal(self):
        rep = sup_monotonicity_check(constant_series(2, 4), 0.5, 1.5)
        assert rep.nonstrict_holds
        assert rep.strictness == "equal"

    def test_random_nonstrict(self):
        rng = random.Random(5)
        for _ in range(5):
            D = random_series(rng)
            rep = sup_monotonicity_check(D, 0.3, 1.1, samples=256)
            assert rep.nonstrict_holds

    def test_double_variant(self):
        D = make_double_series([((2, 2), 1 + 0j)], (4, 4))
        rep = sup_monotonicity_check(D, (0.5, 0.5), (1.0, 1.0), samples=64)
        assert rep.nonstrict_holds
        assert rep.strictness == "strict"

    def test_rejects_bad_order(self):
        with pytest.raises(ValueError):
            sup_monotonicity_check(make_series([(2, 1)], 4), 1.5, 0.5)


class TestThreeLines:
    def test_constant_equality(self):
        D = make_double_series([((1, 1), 2 + 0j)], (1, 1))
        rep = three_lines_check(D, 0.5, 0.5, 2.0, 0.5, 0.5, samples=64)
        assert rep.holds
        assert abs(rep.slack) < 1e-9

    def test_single_term_equality(self):
        # |(2,3) term| factors exactly, so the weighted corner product
        # matches the middle sup
        D = make_double_series([((2, 3), 1 + 0j)], (4, 4))
        rep = three_lines_check(D, 0.5, 0.5, 2.0, 0.5, 0.5, samples=64)
        assert rep.holds
        assert abs(rep.slack) < 1e-8

    def test_random_slack_nonnegative(self):
        rng = random.Random(7)
        for _ in range(3):
            D = random_double(rng)
            rep = three_lines_check(D, 0.4, 0.6, 2.5, 0.5, 0.3, samples=100)
            assert rep.holds
            assert rep.slack >= -1e-6

    def test_rejects_theta_outside(self):
        D = random_double(random.Random(9))
        with pytest.raises(ValueError):
            three_lines_check(D, 0.5, 0.5, 2.0, 0.0, 0.5)


class TestCoefficientExtract:
    def test_two_term(self):
        D = make_series([(1, 1), (2, 1)], 4)
        got = coefficient_extract(series_evaluator(D), 2, 0.5, 1e4, panels=100_000)
        assert abs(got.value - 1) < 1e-2

    def test_absent_index(self):
        D = make_series([(1, 1), (2, 1)], 4)
        got = coefficient_extract(series_evaluator(D), 3, 0.5, 1e4, panels=100_000)
        assert abs(got.value) < 1e-2

    def test_leading_coefficient(self):
        D = make_series([(1, 2.5 - 1j), (3, 0.7)], 4)
        got = coefficient_extract(series_evaluator(D), 1, 0.5, 1e4, panels=100_000)
        assert abs(got.value - (2.5 - 1j)) < 1e-2

    def test_error_bound_covers_truth(self):
        rng = random.Random(11)
        D = random_series(rng, 8, 4)
        ev = series_evaluator(D)
        for j in (1, 2, 5):
            got = coefficient_extract(ev, j, 0.5, 5e3, panels=100_000, support=D.terms)
            assert got.error_bound is not None
            assert abs(got.value - D.terms.get(j, 0j)) <= got.error_bound + 1e-6

    def test_rejects_bad_index(self):
        with pytest.raises(ValueError):
            coefficient_extract(series_evaluator(make_series([], 4)), 0, 0.5, 1e3)


class TestSemigroupIdentify:
    def test_single_frequency(self):
        # A(s) = 10^{-s} = 2^{-s} 5^{-s}, B(s) = 15^{-s}: common phi = 5^{-s}
        A = make_series([(10, 1)], 16)
        B = make_series([(15, 1)], 16)
        phi = semigroup_identify(A, B, 1, panels=20_000)
        assert set(phi.terms) == {5}
        assert abs(phi.coefficient(5) - 1) < 1e-12

    def test_constant_pair(self):
        c = 0.8 - 0.3j
        A = make_series([(4, c)], 8)
        B = make_series([(9, c)], 16)
        phi = semigroup_identify(A, B, 2, panels=20_000)
        assert set(phi.terms) == {1}
        assert abs(phi.coefficient(1) - c) < 1e-12

    def test_multi_term(self):
        rng = random.Random(13)
        coeffs = {n: complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for n in (1, 2, 5)}
        A = DirichletSeries({2 * n: a for n, a in coeffs.items()}, 16)
        B = DirichletSeries({3 * n: a for n, a in coeffs.items()}, 24)
        phi = semigroup_identify(A, B, 1, panels=20_000)
        assert all(abs(phi.coefficient(n) - a) < 1e-9 for n, a in coeffs.items())

    def test_corrupted_input_rejected(self):
        A = make_series([(2, 1)], 16)
        bad = DirichletSeries({3: 1 + 0j, 5: 0.1 + 0j}, 24)
        with pytest.raises(SemigroupError):
            semigroup_identify(A, bad, 1, panels=20_000)

    def test_mismatched_pair_rejected(self):
        A = make_series([(2, 1)], 16)
        B = make_series([(3, 0.5)], 24)
        with pytest.raises(SemigroupError):
            semigroup_identify(A, B, 1, panels=20_000)


class TestCoefficientBound:
    def test_single_term_equality(self):
        # sup over Re = eps of |m^-s n^-t| is m^-eps n^-eps, so the bound
        # holds with equality
        D = make_double_series([((2, 3), 1 + 0j)], (4, 4))
        rep = coefficient_bound_check(D, 0.5, samples=100)
        assert rep.holds
        assert abs(rep.worst_excess) < 1e-9

    def test_constant(self):
        D = make_double_series([((1, 1), 4 + 3j)], (1, 1))
        rep = coefficient_bound_check(D, 1.0, samples=64)
        assert rep.holds
        assert abs(rep.sup_estimate - 5.0) < 1e-9

    def test_random_holds(self):
        rng = random.Random(17)
        for _ in range(3):
            rep = coefficient_bound_check(random_double(rng), 0.7, samples=100)
            assert rep.holds

    def test_embedded_single(self):
        rng = random.Random(19)
        D = embed_single(random_series(rng, 8, 3))
        rep = coefficient_bound_check(D, 0.5, samples=100)
        assert rep.holds
