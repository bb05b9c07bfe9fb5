"""Scalar special functions against quadrature and sampling oracles."""

import math

import numpy as np
import pytest
from scipy import integrate

from bepalloc.errors import DegenerateRatesError, DomainError
from bepalloc.special_math import chernoff_q, hypoexp_pdf, max_exp_pdf, q_func, q_inv


def gaussian_tail_quad(x):
    """Oracle: adaptive quadrature of the standard normal tail."""
    pdf = lambda t: math.exp(-0.5 * t * t) / math.sqrt(2 * math.pi)
    value, _ = integrate.quad(pdf, x, np.inf)
    return value


class TestQFunc:
    def test_zero_is_half(self):
        assert q_func(0.0) == pytest.approx(0.5, abs=1e-15)

    def test_value_against_quadrature(self):
        # includes the 5%-tail point 1.6449 -> ~0.05
        for x in (-3.0, -1.0, 0.3, 1.6449, 2.0, 4.5, 7.0):
            assert q_func(x) == pytest.approx(gaussian_tail_quad(x), rel=1e-10)
        assert q_func(1.6449) == pytest.approx(0.05, abs=1e-4)

    def test_reflection_identity(self):
        for x in np.linspace(-8, 8, 41):
            assert q_func(-x) + q_func(x) == pytest.approx(1.0, abs=1e-14)

    def test_strictly_decreasing(self):
        # below x ~ -5.9 the tail saturates to exactly 1.0 in float64, so
        # strictness is only testable on the representable range
        xs = np.linspace(-5.5, 10, 401)
        vals = [q_func(float(x)) for x in xs]
        assert all(a > b for a, b in zip(vals, vals[1:]))

    def test_rejects_non_finite(self):
        for bad in (math.nan, math.inf, -math.inf):
            with pytest.raises(DomainError):
                q_func(bad)


class TestQInv:
    def test_median(self):
        assert q_inv(0.5) == pytest.approx(0.0, abs=1e-12)

    def test_five_percent_point(self):
        # oracle: bisection against q_func
        lo, hi = 0.0, 10.0
        for _ in range(80):
            mid = 0.5 * (lo + hi)
            if q_func(mid) > 0.05:
                lo = mid
            else:
                hi = mid
        assert q_inv(0.05) == pytest.approx(0.5 * (lo + hi), abs=1e-10)
        assert q_inv(0.05) == pytest.approx(1.6449, abs=1e-4)

    def test_roundtrip_on_x(self):
        for x in np.linspace(-6, 6, 121):
            assert q_inv(q_func(float(x))) == pytest.approx(float(x), abs=1e-8)

    def test_roundtrip_on_p(self):
        for p in np.geomspace(1e-12, 0.999, 301):
            assert q_func(q_inv(float(p))) == pytest.approx(float(p), rel=1e-10)

    def test_strictly_decreasing_in_p(self):
        ps = np.geomspace(1e-6, 0.99, 101)
        vals = [q_inv(float(p)) for p in ps]
        assert all(a > b for a, b in zip(vals, vals[1:]))

    def test_domain(self):
        for bad in (0.0, 1.0, -0.1, 1.5, math.nan):
            with pytest.raises(DomainError):
                q_inv(bad)


class TestChernoffQ:
    def test_endpoints(self):
        assert chernoff_q(0.0) == pytest.approx(0.5, abs=1e-15)
        assert chernoff_q(2.0) == pytest.approx(0.5 * math.exp(-2.0), rel=1e-14)

    def test_upper_bounds_q(self):
        for x in (0.0, 0.5, 1.0, 2.0, 4.0, 6.0):
            assert chernoff_q(x) >= q_func(x)

    def test_rejects_negative(self):
        with pytest.raises(DomainError):
            chernoff_q(-0.5)


class TestMaxExpPdf:
    def test_single_rate_is_exponential(self):
        for z in (0.0, 0.3, 2.0):
            assert max_exp_pdf([1.7], z) == pytest.approx(1.7 * math.exp(-1.7 * z), rel=1e-14)

    def test_two_equal_rates_value(self):
        # 2 e^-1 (1 - e^-1), direct formula
        expected = 2 * math.exp(-1) * (1 - math.exp(-1))
        assert max_exp_pdf([1.0, 1.0], 1.0) == pytest.approx(expected, rel=1e-13)

    def test_integrates_to_one(self):
        for rates in ([2.0], [1.0, 1.0], [0.5, 1.5, 3.0]):
            total, _ = integrate.quad(lambda z: max_exp_pdf(rates, z), 0, np.inf, limit=200)
            assert total == pytest.approx(1.0, abs=1e-6)

    def test_cdf_matches_product_form(self):
        rates = [0.7, 1.3, 2.2]
        for z in (0.4, 1.0, 2.5):
            cdf_quad, _ = integrate.quad(lambda u: max_exp_pdf(rates, u), 0, z, limit=200)
            cdf_closed = math.prod(1 - math.exp(-lam * z) for lam in rates)
            assert cdf_quad == pytest.approx(cdf_closed, abs=1e-9)

    def test_nonnegative(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            rates = list(rng.uniform(0.1, 5.0, size=rng.integers(1, 5)))
            assert max_exp_pdf(rates, float(rng.uniform(0, 10))) >= 0.0

    def test_empty_rates_rejected(self):
        with pytest.raises(DomainError):
            max_exp_pdf([], 1.0)


class TestHypoexpPdf:
    def test_single_rate_is_exponential(self):
        assert hypoexp_pdf([0.9], 2.0) == pytest.approx(0.9 * math.exp(-1.8), rel=1e-14)

    def test_two_rate_value(self):
        # 2 (e^-1 - e^-2), direct two-term formula
        expected = 2 * (math.exp(-1) - math.exp(-2))
        assert hypoexp_pdf([1.0, 2.0], 1.0) == pytest.approx(expected, rel=1e-13)

    def test_integrates_to_one(self):
        for rates in ([1.0, 2.0], [0.4, 1.1, 3.0]):
            total, _ = integrate.quad(lambda w: hypoexp_pdf(rates, w), 0, np.inf, limit=200)
            assert total == pytest.approx(1.0, abs=1e-6)

    def test_matches_sampled_sum(self):
        # Kolmogorov distance between the sampled sum of exp(1) + exp(2)
        # and the closed-form CDF
        rng = np.random.default_rng(11)
        n = 1_000_000
        samples = np.sort(rng.exponential(1.0, n) + rng.exponential(0.5, n))
        cdf = 1 - 2 * np.exp(-samples) + np.exp(-2 * samples)
        ecdf_hi = np.arange(1, n + 1) / n
        ecdf_lo = np.arange(0, n) / n
        ks = max(np.max(np.abs(ecdf_hi - cdf)), np.max(np.abs(ecdf_lo - cdf)))
        assert ks < 0.01

    def test_nonnegative(self):
        rng = np.random.default_rng(4)
        for _ in range(50):
            k = int(rng.integers(2, 5))
            rates = list(np.cumsum(rng.uniform(0.2, 2.0, size=k)))
            assert hypoexp_pdf(rates, float(rng.uniform(0, 10))) >= 0.0

    def test_duplicate_rates_rejected(self):
        with pytest.raises(DegenerateRatesError):
            hypoexp_pdf([1.0, 1.0 + 1e-12], 0.5)
