"""Analytic outage closed forms against each other and Monte Carlo."""

import itertools
import math

import numpy as np
import pytest

from bepalloc.allocation import Thresholds
from bepalloc.channel import FadingScenario, RandomStream
from bepalloc.errors import DegenerateRatesError, DomainError
from bepalloc.outage import (
    OutageResult,
    _mrc_three,
    _mrc_two,
    evaluate_outage,
    halfwidth_95,
    outage_max_of_exponentials,
    outage_monte_carlo,
    outage_mrc_analytic,
    outage_multi_analytic,
    outage_single_analytic,
    outage_sum_of_exponentials,
    outage_unknown_mode_analytic,
)

TH = Thresholds(t1=0.05, t2=0.05)


def scen(alpha_e, interference=0.0):
    return FadingScenario(
        sigma2=0.01, alpha_b=1.0, alpha_e=alpha_e, interference=interference
    )


class TestSingleAnalytic:
    def test_symmetric_half(self):
        assert outage_single_analytic(scen((1.0,)), TH) == pytest.approx(0.5, rel=1e-14)

    def test_vanishes_as_ceiling_relaxes(self):
        th = Thresholds(t1=0.4999, t2=0.05)
        assert outage_single_analytic(scen((1.0,)), th) < 1e-4

    def test_reference_value(self):
        th = Thresholds(t1=0.01, t2=0.05)
        assert outage_single_analytic(scen((1.0,)), th) == pytest.approx(
            0.6666998266725261, rel=1e-12
        )

    def test_misuse(self):
        with pytest.raises(DomainError):
            outage_single_analytic(scen((1.0, 1.0)), TH)
        with pytest.raises(DomainError):
            outage_single_analytic(scen((1.0,), interference=0.01), TH)


class TestMultiAnalytic:
    def test_single_adversary_reduction(self):
        th = Thresholds(t1=0.02, t2=0.07)
        a = outage_multi_analytic(scen((1.3,)), th)
        b = outage_single_analytic(scen((1.3,)), th)
        assert a == pytest.approx(b, rel=1e-12)

    def test_more_adversaries_more_outage(self):
        a1 = outage_multi_analytic(scen((1.0,)), TH)
        a2 = outage_multi_analytic(scen((1.0, 0.8)), TH)
        a3 = outage_multi_analytic(scen((1.0, 0.8, 1.25)), TH)
        assert a1 < a2 < a3

    def test_order_independence(self):
        alphas = (0.6, 1.1, 1.9, 0.9)
        base = outage_multi_analytic(scen(alphas), TH)
        for perm in itertools.permutations(alphas):
            assert outage_multi_analytic(scen(perm), TH) == pytest.approx(base, rel=1e-12)

    def test_in_unit_interval(self):
        rng = np.random.default_rng(21)
        for _ in range(100):
            k = int(rng.integers(1, 6))
            alphas = tuple(np.exp(rng.uniform(-1.5, 1.5, k)))
            t1 = float(rng.uniform(0.003, 0.45))
            v = outage_multi_analytic(scen(alphas), Thresholds(t1, 0.05))
            assert 0.0 <= v <= 1.0

    def test_degenerate_rates_signal(self):
        with pytest.raises(DegenerateRatesError):
            outage_multi_analytic(scen((1.0, 1.0)), TH)

    def test_adversary_limit(self):
        lams = list(np.linspace(1, 2, 21))
        with pytest.raises(DomainError):
            outage_max_of_exponentials(lams, 1.0)


class TestUnknownModeAnalytic:
    def test_zero_interference_matches_multi(self):
        s0 = scen((1.0, 0.8))
        assert outage_unknown_mode_analytic(s0, TH) == pytest.approx(
            outage_multi_analytic(s0, TH), rel=1e-12
        )

    def test_monotone_in_interference(self):
        vals = [
            outage_unknown_mode_analytic(scen((1.0, 0.8), interference=m * 0.01), TH)
            for m in (0.0, 1.0, 5.0, 20.0)
        ]
        assert all(a < b for a, b in zip(vals, vals[1:]))


class TestMrcAnalytic:
    def test_single_adversary_reduction(self):
        th = Thresholds(t1=0.03, t2=0.06)
        assert outage_mrc_analytic(scen((0.9,)), th) == pytest.approx(
            outage_single_analytic(scen((0.9,)), th), rel=1e-12
        )

    def test_general_matches_dedicated_forms(self):
        rng = np.random.default_rng(22)
        for _ in range(200):
            lams2 = sorted(rng.uniform(0.1, 5.0, 2))
            lams3 = sorted(rng.uniform(0.1, 5.0, 3))
            ly = float(rng.uniform(0.1, 5.0))
            if lams2[1] - lams2[0] < 1e-3 or min(np.diff(lams3)) < 1e-3:
                continue
            assert outage_sum_of_exponentials(lams2, ly) == pytest.approx(
                _mrc_two(lams2, ly), rel=1e-12
            )
            assert outage_sum_of_exponentials(lams3, ly) == pytest.approx(
                _mrc_three(lams3, ly), rel=1e-12
            )

    def test_dominates_max_combining(self):
        for alphas in ((1.0, 0.8), (1.0, 0.8, 1.25)):
            assert outage_mrc_analytic(scen(alphas), TH) >= outage_multi_analytic(
                scen(alphas), TH
            )

    def test_near_degenerate_routed_to_mc(self):
        with pytest.raises(DegenerateRatesError):
            outage_mrc_analytic(scen((1.0, 1.0 + 1e-8)), TH)

    def test_rejects_interference(self):
        with pytest.raises(DomainError):
            outage_mrc_analytic(scen((1.0, 0.8), interference=0.01), TH)


class TestMonteCarlo:
    def test_symmetric_half(self):
        r = outage_monte_carlo(scen((1.0,)), TH, "max", 200_000, RandomStream(5))
        assert abs(r.mc_estimate - 0.5) <= 3 * r.mc_halfwidth

    def test_relaxed_ceiling_never_outages(self):
        th = Thresholds(t1=0.4999, t2=0.05)
        r = outage_monte_carlo(scen((1.0,)), th, "max", 100_000, RandomStream(6))
        assert r.mc_estimate < 0.001

    def test_agrees_with_analytic_across_parameters(self):
        rng = np.random.default_rng(23)
        for _ in range(5):
            alphas = (float(rng.uniform(0.5, 2.0)),)
            th = Thresholds(float(rng.uniform(0.005, 0.2)), 0.05)
            s = scen(alphas)
            analytic = outage_single_analytic(s, th)
            r = outage_monte_carlo(s, th, "max", 200_000, RandomStream(int(rng.integers(1e9))))
            assert abs(analytic - r.mc_estimate) <= 3 * r.mc_halfwidth

    def test_sum_combiner_matches_mrc(self):
        s = scen((1.0, 0.8))
        analytic = outage_mrc_analytic(s, TH)
        r = outage_monte_carlo(s, TH, "sum", 300_000, RandomStream(7))
        assert abs(analytic - r.mc_estimate) <= 3 * r.mc_halfwidth

    def test_unknown_mode_event_scaling(self):
        s = scen((1.0, 0.8), interference=0.05)
        analytic = outage_unknown_mode_analytic(s, TH)
        r = outage_monte_carlo(s, TH, "max", 300_000, RandomStream(8))
        assert abs(analytic - r.mc_estimate) <= 3 * r.mc_halfwidth

    def test_halfwidth_formula(self):
        r = outage_monte_carlo(scen((1.0,)), TH, "max", 50_000, RandomStream(9))
        expected = 1.96 * math.sqrt(r.mc_estimate * (1 - r.mc_estimate) / 50_000)
        assert r.mc_halfwidth == pytest.approx(expected, rel=1e-12)
        assert halfwidth_95(0.5, 100) == pytest.approx(1.96 * 0.05, rel=1e-12)

    def test_sum_with_interference_rejected(self):
        with pytest.raises(DomainError):
            outage_monte_carlo(
                scen((1.0, 0.8), interference=0.01), TH, "sum", 1000, RandomStream(1)
            )

    def test_worker_count_is_invisible(self):
        s = scen((1.0, 0.8, 1.25))
        r1 = outage_monte_carlo(s, TH, "max", 300_000, RandomStream(77), workers=1)
        r8 = outage_monte_carlo(s, TH, "max", 300_000, RandomStream(77), workers=8)
        assert r1.mc_estimate == r8.mc_estimate


class TestEvaluateOutage:
    def test_fills_both_sides(self):
        r = evaluate_outage(scen((1.0, 0.8)), TH, "max", 50_000, RandomStream(10))
        assert r.analytic is not None and r.mc_estimate is not None
        assert abs(r.analytic - r.mc_estimate) <= 3 * r.mc_halfwidth

    def test_degenerate_falls_back_to_mc(self):
        r = evaluate_outage(scen((1.0, 1.0)), TH, "max", 20_000, RandomStream(11))
        assert r.analytic is None and r.mc_estimate is not None

    def test_result_validation(self):
        with pytest.raises(DomainError):
            OutageResult(analytic=1.5)
