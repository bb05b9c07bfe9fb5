"""Outage probabilities for every adversary scenario.

Outage here means the allocation problem itself is infeasible: no transmit
power can simultaneously keep the legitimate receiver under its BEP ceiling
and every adversary above its floor.  Because power gains are exponential,
the feasibility events reduce to comparisons between an exponential
variable (the legitimate side) and a max or sum of exponentials (the
adversary side), which have closed forms.  A scenario-generic Monte Carlo
estimator provides the independent cross-check.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

import numpy as np

from . import _kernels
from .allocation import Thresholds
from .channel import FadingScenario, RandomStream, draw_power_gains
from .errors import DegenerateRatesError, DomainError
from .special_math import assert_distinct_rates, q_inv

# feasibility events are enumerated over all adversary subsets (2^E terms)
MAX_ADVERSARIES_ANALYTIC = 20

# relative rate gap below which the hypoexponential closed form is too
# cancellation-prone to trust; callers fall back to Monte Carlo
MRC_RATE_GAP = 1e-6

MC_BATCH = 1 << 17


@dataclass(frozen=True)
class OutageResult:
    """Analytic value and/or Monte Carlo estimate of an outage probability.

    ``mc_halfwidth`` is the normal-approximation 95% confidence half-width
    1.96 sqrt(p(1-p)/trials).
    """

    analytic: Optional[float] = None
    mc_estimate: Optional[float] = None
    mc_halfwidth: Optional[float] = None
    trials: int = 0

    def __post_init__(self):
        for name, v in (("analytic", self.analytic), ("mc_estimate", self.mc_estimate)):
            if v is not None and not (0.0 <= v <= 1.0):
                raise DomainError(f"{name} must be a probability, got {v!r}")


def _threshold_factors(th: Thresholds) -> tuple:
    return q_inv(th.t1) ** 2, q_inv(th.t2) ** 2


def outage_max_of_exponentials(rates: Sequence[float], rate_y: float) -> float:
    """P(max of exponentials with given rates exceeds an independent
    exponential with rate ``rate_y``).

    Inclusion-exclusion over nonempty adversary subsets S:
        sum_S (-1)^(|S|+1) rate_y / (sum_S rates + rate_y)
    """
    lams = [float(r) for r in rates]
    if not lams or any(l <= 0.0 for l in lams) or rate_y <= 0.0:
        raise DomainError("rates must be positive and nonempty")
    if len(lams) > MAX_ADVERSARIES_ANALYTIC:
        raise DomainError(
            f"subset enumeration limited to {MAX_ADVERSARIES_ANALYTIC} adversaries"
        )
    terms = []
    for size in range(1, len(lams) + 1):
        sign = 1.0 if size % 2 == 1 else -1.0
        for combo in combinations(lams, size):
            terms.append(sign * rate_y / (math.fsum(combo) + rate_y))
    return math.fsum(terms)


def outage_sum_of_exponentials(rates: Sequence[float], rate_y: float) -> float:
    """P(sum of exponentials with given distinct rates exceeds an
    independent exponential with rate ``rate_y``).

        1 - (prod_e l_e) sum_e 1 / [prod_{i != e}(l_i - l_e) (l_e + l_y)]

    The partial fractions divide by rate differences, so rate gaps below
    ``MRC_RATE_GAP`` relative raise :class:`DegenerateRatesError`.
    """
    lams = [float(r) for r in rates]
    if not lams or any(l <= 0.0 for l in lams) or rate_y <= 0.0:
        raise DomainError("rates must be positive and nonempty")
    if len(lams) > 1:
        assert_distinct_rates(lams, rel_tol=MRC_RATE_GAP)
    prod_l = math.prod(lams)
    terms = []
    for e, lam in enumerate(lams):
        denom = math.prod(other - lam for i, other in enumerate(lams) if i != e)
        terms.append(1.0 / (denom * (lam + rate_y)))
    return 1.0 - prod_l * math.fsum(terms)


def _mrc_two(rates: Sequence[float], rate_y: float) -> float:
    """Dedicated two-adversary closed form (cross-checks the general one)."""
    l1, l2 = (float(r) for r in rates)
    ly = float(rate_y)
    return 1.0 - (l1 * l2 / (l2 - l1)) * (1.0 / (l1 + ly) - 1.0 / (l2 + ly))


def _mrc_three(rates: Sequence[float], rate_y: float) -> float:
    """Dedicated three-adversary closed form."""
    l1, l2, l3 = (float(r) for r in rates)
    ly = float(rate_y)
    return 1.0 - (l1 * l2 * l3) * (
        1.0 / ((l2 - l1) * (l3 - l1) * (l1 + ly))
        + 1.0 / ((l1 - l2) * (l3 - l2) * (l2 + ly))
        + 1.0 / ((l1 - l3) * (l2 - l3) * (l3 + ly))
    )


def multi_eve_rates(scenario: FadingScenario, th: Thresholds) -> tuple:
    """Exponential rates of the passive multi-adversary feasibility event:
    lam_e = 1 / (c1 alpha_e^2), lam_y = 1 / (c2 alpha_B^2)."""
    c1, c2 = _threshold_factors(th)
    lams = [1.0 / (c1 * a**2) for a in scenario.alpha_e]
    lam_y = 1.0 / (c2 * scenario.alpha_b**2)
    return lams, lam_y


def unknown_mode_rates(scenario: FadingScenario, th: Thresholds) -> tuple:
    """Rates for the unknown-mode event, where jamming power I inflates the
    legitimate noise: lam_e = 1 / ((sigma^2 + I) c1 alpha_e^2),
    lam_y = 1 / (sigma^2 c2 alpha_B^2)."""
    c1, c2 = _threshold_factors(th)
    s2 = scenario.sigma2
    lams = [1.0 / ((s2 + scenario.interference) * c1 * a**2) for a in scenario.alpha_e]
    lam_y = 1.0 / (s2 * c2 * scenario.alpha_b**2)
    return lams, lam_y


def outage_single_analytic(scenario: FadingScenario, th: Thresholds) -> float:
    """Single passive adversary:
    c1 alpha_E^2 / (c2 alpha_B^2 + c1 alpha_E^2)."""
    if scenario.n_adversaries != 1:
        raise DomainError("outage_single_analytic requires exactly one adversary")
    if scenario.interference != 0.0:
        raise DomainError("single-adversary closed form assumes no jamming; "
                          "use outage_unknown_mode_analytic")
    c1, c2 = _threshold_factors(th)
    num = c1 * scenario.alpha_e[0] ** 2
    return num / (c2 * scenario.alpha_b**2 + num)


def outage_multi_analytic(scenario: FadingScenario, th: Thresholds) -> float:
    """E passive adversaries, each individually constrained (max combining).

    Pairwise-close path losses are rejected for E >= 2 (contract matches the
    MRC formula's degeneracy handling; use Monte Carlo there).
    """
    lams, lam_y = multi_eve_rates(scenario, th)
    if len(lams) > 1:
        assert_distinct_rates(lams, rel_tol=1e-9)
    return outage_max_of_exponentials(lams, lam_y)


def outage_unknown_mode_analytic(scenario: FadingScenario, th: Thresholds) -> float:
    """Unknown adversary modes: best-gain adversary listens, others jam."""
    lams, lam_y = unknown_mode_rates(scenario, th)
    if len(lams) > 1:
        assert_distinct_rates(lams, rel_tol=1e-9)
    return outage_max_of_exponentials(lams, lam_y)


def outage_mrc_analytic(scenario: FadingScenario, th: Thresholds) -> float:
    """Cooperative adversaries combining receptions (sum of their gains)."""
    if scenario.interference != 0.0:
        raise DomainError("MRC outage assumes passive adversaries (no jamming)")
    lams, lam_y = multi_eve_rates(scenario, th)
    return outage_sum_of_exponentials(lams, lam_y)


def _mc_batch_sizes(trials: int) -> list:
    full, rem = divmod(trials, MC_BATCH)
    return [MC_BATCH] * full + ([rem] if rem else [])


def _run_batches(fn, n_batches: int, workers: int) -> list:
    if workers > 1 and n_batches > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, range(n_batches)))
    return [fn(j) for j in range(n_batches)]


def halfwidth_95(p_hat: float, trials: int) -> float:
    return 1.96 * math.sqrt(p_hat * (1.0 - p_hat) / trials)


def outage_monte_carlo(
    scenario: FadingScenario,
    th: Thresholds,
    combiner: str = "max",
    trials: int = 1_000_000,
    stream: RandomStream = None,
    workers: int = 1,
) -> OutageResult:
    """Estimate the outage probability by drawing channels and evaluating
    the scenario's feasibility inequality per trial.

    ``combiner`` selects the adversary combining rule: ``"max"`` for
    independent/unknown-mode adversaries (interference folds into the event
    when the scenario carries it) and ``"sum"`` for MRC cooperation.
    Trials are split into fixed-size batches, each on its own child stream,
    so the estimate is identical for any ``workers`` count.
    """
    if trials < 1:
        raise DomainError("trials must be >= 1")
    if stream is None:
        raise DomainError("an explicit RandomStream is required for reproducibility")
    c1, c2 = _threshold_factors(th)
    s2 = scenario.sigma2
    if combiner == "max":
        weights = np.array(
            [(s2 + scenario.interference) * c1 * a**2 for a in scenario.alpha_e]
        )
        y_weight = s2 * c2 * scenario.alpha_b**2
        kernel = _kernels.count_infeasible_max
    elif combiner == "sum":
        if scenario.interference != 0.0:
            raise DomainError("sum combining models passive adversaries; "
                              "interference must be 0")
        weights = np.array([c1 * a**2 for a in scenario.alpha_e])
        y_weight = c2 * scenario.alpha_b**2
        kernel = _kernels.count_infeasible_sum
    else:
        raise DomainError(f"combiner must be 'max' or 'sum', got {combiner!r}")

    sizes = _mc_batch_sizes(trials)
    children = stream.split(len(sizes))
    n_adv = scenario.n_adversaries

    def run(j: int) -> int:
        gain_b, gains_e = draw_power_gains(children[j].generator, sizes[j], n_adv)
        return kernel(gain_b, gains_e, weights, y_weight)

    bad = sum(_run_batches(run, len(sizes), workers))
    p_hat = bad / trials
    return OutageResult(
        mc_estimate=p_hat, mc_halfwidth=halfwidth_95(p_hat, trials), trials=trials
    )


def evaluate_outage(
    scenario: FadingScenario,
    th: Thresholds,
    combiner: str = "max",
    trials: int = None,
    stream: RandomStream = None,
    workers: int = 1,
) -> OutageResult:
    """Analytic outage where a closed form applies, plus a Monte Carlo
    estimate when ``trials`` is given.  Degenerate rates silently drop the
    analytic side (the Monte Carlo estimate is the fallback)."""
    analytic = None
    try:
        if combiner == "sum":
            analytic = outage_mrc_analytic(scenario, th)
        elif scenario.interference > 0.0:
            analytic = outage_unknown_mode_analytic(scenario, th)
        elif scenario.n_adversaries == 1:
            analytic = outage_single_analytic(scenario, th)
        else:
            analytic = outage_multi_analytic(scenario, th)
    except DegenerateRatesError:
        analytic = None
    if trials is None:
        return OutageResult(analytic=analytic)
    mc = outage_monte_carlo(scenario, th, combiner, trials, stream, workers)
    return OutageResult(
        analytic=analytic,
        mc_estimate=mc.mc_estimate,
        mc_halfwidth=mc.mc_halfwidth,
        trials=mc.trials,
    )
