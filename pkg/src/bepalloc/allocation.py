"""Minimum-power allocators for every single-antenna scenario.

Each solver answers the same question: what is the smallest transmit power
that keeps the legitimate receiver's error probability at or below its
ceiling while every adversary stays at or above its floor?  All of these
problems collapse to a pair of power bounds, so the answers are closed
forms; feasibility is the statement that the lower bound does not exceed
the upper one.  Boundary equality counts as feasible (the constraints are
non-strict).
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .channel import ChannelDraw, FadingScenario
from .errors import DomainError
from .special_math import q_inv


@dataclass(frozen=True)
class Thresholds:
    """Error-probability targets: t1 caps the legitimate receiver's BEP,
    t2 is the floor forced on every adversary.

    Both must lie in (0, 0.5).  t1 > t2 is allowed (threshold sweeps cross
    t2 routinely); it just means feasibility requires a correspondingly
    larger legitimate gain advantage.
    """

    t1: float
    t2: float

    def __post_init__(self):
        for name, v in (("t1", self.t1), ("t2", self.t2)):
            if not (math.isfinite(v) and 0.0 < v < 0.5):
                raise DomainError(f"{name} must lie in (0, 0.5), got {v!r}")


@dataclass(frozen=True)
class AllocationResult:
    """Outcome of a power allocation: feasibility, the optimal power (only
    when feasible), and which constraint pinned it."""

    feasible: bool
    p_opt: Optional[float] = None
    binding: Optional[str] = None

    def __post_init__(self):
        if self.feasible and (self.p_opt is None or self.p_opt <= 0.0):
            raise DomainError("feasible results must carry a positive p_opt")
        if not self.feasible and self.p_opt is not None:
            raise DomainError("infeasible results must not carry a power")


_INFEASIBLE = AllocationResult(feasible=False)


def _gain_b(draw: ChannelDraw, scenario: FadingScenario) -> float:
    return scenario.alpha_b**2 * float(np.abs(draw.h_b[0]) ** 2)


def _gains_e(draw: ChannelDraw, scenario: FadingScenario) -> list:
    return [
        a**2 * float(np.abs(draw.h_e[e, 0]) ** 2)
        for e, a in enumerate(scenario.alpha_e)
    ]


def _require_single_antenna(scenario: FadingScenario, op: str) -> None:
    if scenario.antennas != 1:
        raise DomainError(f"{op} applies to single-antenna scenarios (M=1)")


def _require_single_adversary(scenario: FadingScenario, op: str) -> None:
    if scenario.n_adversaries != 1:
        raise DomainError(f"{op} requires exactly one adversary (E=1)")


def secrecy_rate(draw: ChannelDraw, scenario: FadingScenario, power: float) -> float:
    """Nonnegative capacity difference between the legitimate link and the
    strongest adversary, in bits/s/Hz."""
    if power < 0.0:
        raise DomainError(f"power must be >= 0, got {power!r}")
    _require_single_antenna(scenario, "secrecy_rate")
    a = _gain_b(draw, scenario) / scenario.sigma2
    b = max(_gains_e(draw, scenario)) / scenario.sigma2
    rate = math.log2(1.0 + a * power) - math.log2(1.0 + b * power)
    return max(0.0, rate)


def allocate_secrecy_baseline(
    draw: ChannelDraw, scenario: FadingScenario, r_min: float
) -> AllocationResult:
    """Minimum power achieving secrecy rate r_min (the rate-criterion
    baseline).

    With per-watt SNR slopes a (legitimate) and b (adversary), the rate
    constraint (1 + aP)/(1 + bP) >= 2^r_min is satisfiable iff
    a > 2^r_min * b, in which case the minimum power is
    (2^r_min - 1) / (a - 2^r_min * b).
    """
    if not (math.isfinite(r_min) and r_min > 0.0):
        raise DomainError(f"r_min must be positive, got {r_min!r}")
    _require_single_antenna(scenario, "allocate_secrecy_baseline")
    a = _gain_b(draw, scenario) / scenario.sigma2
    b = max(_gains_e(draw, scenario)) / scenario.sigma2
    ratio = 2.0**r_min
    if a <= ratio * b:
        return _INFEASIBLE
    p_opt = (ratio - 1.0) / (a - ratio * b)
    return AllocationResult(feasible=True, p_opt=p_opt, binding="secrecy_rate")


def allocate_bpsk_single(
    draw: ChannelDraw, scenario: FadingScenario, th: Thresholds
) -> AllocationResult:
    """BPSK thresholds, one adversary.

    Feasible iff g_E (Q^-1(t1))^2 <= g_B (Q^-1(t2))^2 with g the effective
    power gains; the optimal power sits on the legitimate constraint:
    p_opt = sigma^2 (Q^-1(t1))^2 / g_B.
    """
    _require_single_antenna(scenario, "allocate_bpsk_single")
    _require_single_adversary(scenario, "allocate_bpsk_single")
    c1 = q_inv(th.t1) ** 2
    c2 = q_inv(th.t2) ** 2
    g_b = _gain_b(draw, scenario)
    g_e = _gains_e(draw, scenario)[0]
    if g_e * c1 > g_b * c2:
        return _INFEASIBLE
    return AllocationResult(
        feasible=True, p_opt=scenario.sigma2 * c1 / g_b, binding="legitimate"
    )


def allocate_qpsk_single(
    draw: ChannelDraw, scenario: FadingScenario, th: Thresholds
) -> AllocationResult:
    """QPSK thresholds using the linearized (quadratic-term-free) BEP.

    Identical feasibility region to BPSK; the SNR/2 structure doubles the
    power: p_opt = 2 sigma^2 (Q^-1(t1))^2 / g_B.
    """
    _require_single_antenna(scenario, "allocate_qpsk_single")
    _require_single_adversary(scenario, "allocate_qpsk_single")
    c1 = q_inv(th.t1) ** 2
    c2 = q_inv(th.t2) ** 2
    g_b = _gain_b(draw, scenario)
    g_e = _gains_e(draw, scenario)[0]
    if g_e * c1 > g_b * c2:
        return _INFEASIBLE
    return AllocationResult(
        feasible=True, p_opt=2.0 * scenario.sigma2 * c1 / g_b, binding="legitimate"
    )


def qpsk_exact_constraint_slack(
    draw: ChannelDraw,
    scenario: FadingScenario,
    th: Thresholds,
    result: AllocationResult,
) -> tuple:
    """Slack of the exact (quadratic) QPSK constraints at an allocated power.

    Returns ``(t1 - exact BEP_B, exact BEP_E - t2)``.  The approximate
    allocator does not guarantee the adversary-side slack is nonnegative;
    it is reported here rather than asserted.
    """
    from .modulation import bep_qpsk

    if not result.feasible:
        raise DomainError("slack is only defined for feasible allocations")
    p = result.p_opt
    snr_b = _gain_b(draw, scenario) * p / scenario.sigma2
    snr_e = _gains_e(draw, scenario)[0] * p / scenario.sigma2
    return th.t1 - bep_qpsk(snr_b), bep_qpsk(snr_e) - th.t2


def allocate_chernoff(
    draw: ChannelDraw, scenario: FadingScenario, th: Thresholds
) -> AllocationResult:
    """BPSK thresholds with the Chernoff-bound tail in place of Q.

    p_opt = -2 sigma^2 ln(2 t1) / g_B, feasible iff
    g_E ln(2 t1) >= g_B ln(2 t2).  Thresholds are already restricted to
    (0, 0.5), so both logs are negative.
    """
    _require_single_antenna(scenario, "allocate_chernoff")
    _require_single_adversary(scenario, "allocate_chernoff")
    g_b = _gain_b(draw, scenario)
    g_e = _gains_e(draw, scenario)[0]
    l1 = math.log(2.0 * th.t1)
    l2 = math.log(2.0 * th.t2)
    if g_e * l1 < g_b * l2:
        return _INFEASIBLE
    return AllocationResult(
        feasible=True, p_opt=-2.0 * scenario.sigma2 * l1 / g_b, binding="legitimate"
    )


def allocate_multi_eve(
    draw: ChannelDraw, scenario: FadingScenario, th: Thresholds
) -> AllocationResult:
    """BPSK thresholds against E independent adversaries.

    Only the largest adversary gain matters for feasibility; the optimal
    power itself does not depend on the adversary count.
    """
    _require_single_antenna(scenario, "allocate_multi_eve")
    c1 = q_inv(th.t1) ** 2
    c2 = q_inv(th.t2) ** 2
    g_b = _gain_b(draw, scenario)
    if max(_gains_e(draw, scenario)) * c1 > g_b * c2:
        return _INFEASIBLE
    return AllocationResult(
        feasible=True, p_opt=scenario.sigma2 * c1 / g_b, binding="legitimate"
    )


def allocate_unknown_mode(
    draw: ChannelDraw, scenario: FadingScenario, th: Thresholds
) -> AllocationResult:
    """Adversaries of unknown mode: the best-gain one listens, the rest jam
    with aggregate power ``scenario.interference``.

    The legitimate SNR sees sigma^2 + I, so
    p_opt = (sigma^2 + I)(Q^-1(t1))^2 / g_B, and feasibility becomes
    (sigma^2 + I) c1 max_e g_e <= sigma^2 c2 g_B.
    """
    _require_single_antenna(scenario, "allocate_unknown_mode")
    c1 = q_inv(th.t1) ** 2
    c2 = q_inv(th.t2) ** 2
    s2 = scenario.sigma2
    noise_b = s2 + scenario.interference
    g_b = _gain_b(draw, scenario)
    if noise_b * c1 * max(_gains_e(draw, scenario)) > s2 * c2 * g_b:
        return _INFEASIBLE
    return AllocationResult(
        feasible=True, p_opt=noise_b * c1 / g_b, binding="legitimate"
    )


def allocate_mrc(
    draw: ChannelDraw, scenario: FadingScenario, th: Thresholds
) -> AllocationResult:
    """Cooperative adversaries combining their receptions (MRC), so their
    effective gain is the sum over adversaries.

    Same optimal power as the single-adversary case; feasibility compares
    the summed adversary gain against the legitimate one.
    """
    _require_single_antenna(scenario, "allocate_mrc")
    c1 = q_inv(th.t1) ** 2
    c2 = q_inv(th.t2) ** 2
    g_b = _gain_b(draw, scenario)
    if math.fsum(_gains_e(draw, scenario)) * c1 > g_b * c2:
        return _INFEASIBLE
    return AllocationResult(
        feasible=True, p_opt=scenario.sigma2 * c1 / g_b, binding="legitimate"
    )
