"""Block-failure model, threshold transformation, and bit-flip simulation."""

import math

import numpy as np
import pytest

from bepalloc.allocation import Thresholds
from bepalloc.channel import FadingScenario, RandomStream
from bepalloc.coding import (
    BlockCodeParams,
    block_fail_prob,
    block_failures_mc,
    coded_outage,
    effective_thresholds,
)
from bepalloc.errors import CodeDesignError, DomainError
from bepalloc.outage import evaluate_outage


def direct_block_fail(p, n, t):
    """Oracle: exact binomial tail via integer binomial coefficients."""
    return 1.0 - sum(math.comb(n, i) * p**i * (1 - p) ** (n - i) for i in range(t + 1))


class TestBlockCodeParams:
    def test_validation(self):
        BlockCodeParams(n=1, t=0)
        BlockCodeParams(n=63, t=1)
        with pytest.raises(DomainError):
            BlockCodeParams(n=0, t=0)
        with pytest.raises(DomainError):
            BlockCodeParams(n=7, t=4)  # t >= n/2
        with pytest.raises(DomainError):
            BlockCodeParams(n=7, t=1, target_block_fail_legit=0.0)


class TestBlockFailProb:
    def test_endpoints(self):
        code = BlockCodeParams(n=63, t=1)
        assert block_fail_prob(0.0, code) == 0.0
        assert block_fail_prob(1.0, code) == 1.0

    def test_reference_value(self):
        # exact binomial tail: 1 - 0.95^63 - 63*0.05*0.95^62
        code = BlockCodeParams(n=63, t=1)
        assert block_fail_prob(0.05, code) == pytest.approx(0.8295302262985311, rel=1e-12)

    def test_matches_direct_sum(self):
        for n, t in ((7, 1), (63, 1), (15, 2)):
            code = BlockCodeParams(n=n, t=t)
            for p in (0.001, 0.01, 0.05, 0.1, 0.4):
                assert block_fail_prob(p, code) == pytest.approx(
                    direct_block_fail(p, n, t), rel=1e-10
                )

    def test_stable_for_tiny_p(self):
        # leading term C(63,2) p^2 dominates; naive 1 - sum would cancel
        code = BlockCodeParams(n=63, t=1)
        p = 1e-9
        lead = math.comb(63, 2) * p**2
        assert block_fail_prob(p, code) == pytest.approx(lead, rel=1e-5)

    def test_strictly_increasing(self):
        code = BlockCodeParams(n=15, t=2)
        ps = np.linspace(1e-4, 0.9999, 200)
        vals = [block_fail_prob(float(p), code) for p in ps]
        assert all(a < b for a, b in zip(vals, vals[1:]))


class TestEffectiveThresholds:
    def test_bisection_roundtrip(self):
        code = BlockCodeParams(n=63, t=1, target_block_fail_legit=0.01,
                               target_block_success_eve=0.01)
        th = effective_thresholds(code)
        assert block_fail_prob(th.t1, code) == pytest.approx(0.01, abs=1e-9)
        assert block_fail_prob(th.t2, code) == pytest.approx(0.99, abs=1e-9)

    def test_t0_closed_form(self):
        # with t = 0 the block fails on any bit error: p1 = 1 - (1-tau)^(1/n)
        code = BlockCodeParams(n=31, t=0, target_block_fail_legit=0.02,
                               target_block_success_eve=0.6)
        th = effective_thresholds(code)
        assert th.t1 == pytest.approx(1.0 - (1.0 - 0.02) ** (1.0 / 31.0), abs=1e-10)

    def test_monotone_in_target(self):
        p1s = []
        for tau in (0.001, 0.01, 0.1):
            code = BlockCodeParams(n=63, t=1, target_block_fail_legit=tau,
                                   target_block_success_eve=0.01)
            p1s.append(effective_thresholds(code).t1)
        assert p1s == sorted(p1s)

    def test_design_inequalities(self):
        # raw thresholds land where adversaries expect many more than t
        # errors per block and the legitimate user many fewer
        code = BlockCodeParams(n=63, t=1)
        th = effective_thresholds(code)
        assert th.t2 * 63 > 2 * 1
        assert th.t1 * 63 < 1 / 2

    def test_unachievable_targets(self):
        with pytest.raises(CodeDesignError):
            # one uncoded bit cannot hold adversary block success at 1%
            effective_thresholds(BlockCodeParams(n=1, t=0))
        with pytest.raises(CodeDesignError):
            # lax failure target and strict success target cross over
            effective_thresholds(
                BlockCodeParams(n=63, t=1, target_block_fail_legit=0.97,
                                target_block_success_eve=0.01)
            )


class TestCodedOutage:
    scen = FadingScenario(sigma2=0.01, alpha_b=1.0, alpha_e=(1.0,))

    def test_identity_code_is_transparent(self):
        t1, t2 = 0.02, 0.05
        code = BlockCodeParams(n=1, t=0, target_block_fail_legit=t1,
                               target_block_success_eve=1.0 - t2)
        coded = coded_outage(self.scen, code)
        uncoded = evaluate_outage(self.scen, Thresholds(t1, t2))
        assert coded.analytic == pytest.approx(uncoded.analytic, rel=1e-12)

    def test_monotone_in_correction_capability(self):
        vals = []
        for t in (0, 1, 2, 3):
            code = BlockCodeParams(n=63, t=t, target_block_fail_legit=0.01,
                                   target_block_success_eve=0.01)
            vals.append(coded_outage(self.scen, code).analytic)
        assert all(a > b for a, b in zip(vals, vals[1:]))

    def test_code_beats_matched_uncoded(self):
        # uncoded bit ceiling matched to the same per-block reliability
        n, tau, t2 = 63, 0.01, 0.05
        code = BlockCodeParams(n=n, t=1, target_block_fail_legit=tau,
                               target_block_success_eve=(1 - t2) ** n)
        coded = coded_outage(self.scen, code).analytic
        t1_uncoded = -math.expm1(math.log1p(-tau) / n)
        uncoded = evaluate_outage(self.scen, Thresholds(t1_uncoded, t2)).analytic
        assert coded < uncoded


class TestBitFlipSimulation:
    def test_matches_formula(self):
        code = BlockCodeParams(n=7, t=1)
        blocks = 300_000
        failed = block_failures_mc(code, 0.05, blocks, RandomStream(60))
        p_hat = failed / blocks
        expected = block_fail_prob(0.05, code)
        se = math.sqrt(expected * (1 - expected) / blocks)
        assert abs(p_hat - expected) <= 3 * se

    def test_worker_invariance(self):
        code = BlockCodeParams(n=63, t=1)
        a = block_failures_mc(code, 0.05, 200_000, RandomStream(61), workers=1)
        b = block_failures_mc(code, 0.05, 200_000, RandomStream(61), workers=4)
        assert a == b
