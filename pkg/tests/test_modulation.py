"""Error-probability models, including bit- and symbol-level simulation."""

import math

import numpy as np
import pytest

from bepalloc.errors import DomainError
from bepalloc.modulation import (
    ErrorModel,
    bep_bpsk,
    bep_bpsk_chernoff,
    bep_qpsk,
    sep_min_distance_bound,
    sep_qpsk,
)
from bepalloc.special_math import q_func, q_inv


class TestBepBpsk:
    def test_zero_snr(self):
        assert bep_bpsk(0.0) == pytest.approx(0.5, abs=1e-15)

    def test_inverse_consistency(self):
        snr = q_inv(0.05) ** 2
        assert bep_bpsk(snr) == pytest.approx(0.05, abs=1e-6)

    def test_bit_level_simulation(self):
        # oracle: direct BPSK detection over unit-variance noise
        snr = 4.0
        n = 10_000_000
        rng = np.random.default_rng(31)
        errors = int(np.count_nonzero(rng.standard_normal(n) > math.sqrt(snr)))
        p_hat = errors / n
        se = math.sqrt(p_hat * (1 - p_hat) / n)
        assert abs(bep_bpsk(snr) - p_hat) <= 3 * se

    def test_monotone_and_bounded(self):
        snrs = np.linspace(0, 30, 200)
        vals = [bep_bpsk(float(s)) for s in snrs]
        assert all(0.0 <= v <= 1.0 for v in vals)
        assert all(a >= b for a, b in zip(vals, vals[1:]))

    def test_negative_snr(self):
        with pytest.raises(DomainError):
            bep_bpsk(-1.0)


class TestSepQpsk:
    def test_zero_snr(self):
        assert sep_qpsk(0.0) == pytest.approx(0.75, abs=1e-15)

    def test_vanishes_at_high_snr(self):
        assert sep_qpsk(1e4) < 1e-20

    def test_symbol_level_simulation(self):
        # oracle: two Gray-mapped quadratures, each at per-dimension SNR snr/2
        snr = 8.0
        n = 10_000_000
        rng = np.random.default_rng(32)
        sd = 1.0 / math.sqrt(snr / 2.0)
        err_i = rng.standard_normal(n) * sd < -1.0
        err_q = rng.standard_normal(n) * sd < -1.0
        p_hat = np.count_nonzero(err_i | err_q) / n
        se = math.sqrt(p_hat * (1 - p_hat) / n)
        assert abs(sep_qpsk(snr) - p_hat) <= 3 * se


class TestBepQpsk:
    def test_zero_snr_values(self):
        assert bep_qpsk(0.0) == pytest.approx(0.375, abs=1e-15)
        assert bep_qpsk(0.0, approx=True) == pytest.approx(0.5, abs=1e-15)

    def test_dropped_term_bound(self):
        for snr in np.linspace(0, 40, 100):
            q = q_func(math.sqrt(snr / 2.0))
            assert abs(bep_qpsk(float(snr)) - bep_qpsk(float(snr), approx=True)) <= 0.5 * q * q + 1e-15

    def test_half_of_sep(self):
        for snr in (0.0, 1.0, 5.0, 12.0):
            assert bep_qpsk(snr) == pytest.approx(0.5 * sep_qpsk(snr), rel=1e-14)
            assert bep_qpsk(snr) <= sep_qpsk(snr)

    def test_snr_halving_vs_bpsk(self):
        # the approximate QPSK BEP at 2s equals the BPSK BEP at s
        for s in (0.5, 2.0, 7.0):
            assert bep_bpsk(s) == pytest.approx(bep_qpsk(2 * s, approx=True), rel=1e-14)


class TestMinDistanceBound:
    def test_inverse_consistency(self):
        d = 2.0 * 0.3 * q_inv(0.05)
        assert sep_min_distance_bound(d, 0.3) == pytest.approx(0.05, rel=1e-10)

    def test_vanishes_with_distance(self):
        assert sep_min_distance_bound(1e3, 1.0) < 1e-100

    def test_bpsk_consistency(self):
        # antipodal symbols +-sqrt(P): d_min = 2 sqrt(P) recovers Q(sqrt(P/s^2))
        p, sigma2 = 0.04, 0.01
        lhs = sep_min_distance_bound(2 * math.sqrt(p), math.sqrt(sigma2))
        assert lhs == pytest.approx(bep_bpsk(p / sigma2), rel=1e-14)

    def test_domain(self):
        with pytest.raises(DomainError):
            sep_min_distance_bound(0.0, 1.0)
        with pytest.raises(DomainError):
            sep_min_distance_bound(1.0, -1.0)


def test_chernoff_bep_dominates_exact():
    for snr in (0.0, 1.0, 4.0, 9.0):
        assert bep_bpsk_chernoff(snr) >= bep_bpsk(snr)


class TestErrorModel:
    def test_dispatch(self):
        snr = 3.0
        assert ErrorModel("bpsk_exact").error_probability(snr) == bep_bpsk(snr)
        assert ErrorModel("qpsk_exact").error_probability(snr) == bep_qpsk(snr)
        assert ErrorModel("qpsk_approx").error_probability(snr) == bep_qpsk(snr, approx=True)
        assert ErrorModel("chernoff_bpsk").error_probability(snr) == bep_bpsk_chernoff(snr)
        model = ErrorModel("min_distance", d_min=0.4)
        assert model.error_probability(sigma=0.1) == sep_min_distance_bound(0.4, 0.1)

    def test_validation(self):
        with pytest.raises(DomainError):
            ErrorModel("8psk")
        with pytest.raises(DomainError):
            ErrorModel("min_distance")
        with pytest.raises(DomainError):
            ErrorModel("bpsk_exact", d_min=1.0)
