"""Multi-antenna transmitter: matched-filter data beam, null-space
artificial noise, and the exact two-variable power minimum.

The data beamformer points at the legitimate channel; the artificial-noise
beamformer lives in that channel's orthogonal complement, so the noise
costs the legitimate user nothing while raising every adversary's floor.
With both directions fixed, minimizing p_d + p_an subject to the BEP
constraints is a two-variable linear program whose optimum is a corner:
p_d sits on the legitimate constraint and p_an on the worst adversary
constraint (or zero).  No iterative solver is involved.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import _kernels
from .allocation import Thresholds
from .channel import ChannelDraw, FadingScenario, RandomStream, draw_channel_matrix
from .errors import DomainError, NoNullSpaceError
from .outage import MC_BATCH, OutageResult, halfwidth_95
from .special_math import q_inv

# squared-sine threshold below which the projection of the adversary
# channel is considered numerically parallel to h_b
_PARALLEL_TOL = 1e-12


@dataclass(frozen=True)
class BeamformingSolution:
    """Beamformer pair with the minimum-power split.

    Both vectors are unit norm; ``w_an`` is orthogonal to the legitimate
    channel.  ``blocking_adversary`` names the constraint that cannot be
    met when infeasible.
    """

    w_d: np.ndarray
    w_an: np.ndarray
    p_d: float
    p_an: float
    feasible: bool
    blocking_adversary: Optional[int] = None

    @property
    def p_total(self) -> float:
        return self.p_d + self.p_an


def _orthogonal_fallback(h_b: np.ndarray, hb2: float) -> np.ndarray:
    # basis vector of the weakest h_b component, projected and normalized
    k = int(np.argmin(np.abs(h_b) ** 2))
    v = -(np.conj(h_b[k]) / hb2) * h_b
    v[k] += 1.0
    return v / np.linalg.norm(v)


def design_beamformers(h_b: np.ndarray, h_e_list: Sequence[np.ndarray]) -> tuple:
    """Data and artificial-noise beamformers for one channel realization.

    ``w_d`` is the matched filter h_b / ||h_b|| (so h_b^H w_d = ||h_b||).
    ``w_an`` is the strongest adversary's channel projected onto the
    orthogonal complement of h_b and normalized, which spends the noise
    power where it hurts the worst adversary most; if that projection is
    numerically zero, an arbitrary orthonormal direction is used instead.
    """
    h_b = np.asarray(h_b, dtype=complex)
    if h_b.ndim != 1 or h_b.shape[0] < 2:
        raise NoNullSpaceError("artificial noise needs at least two antennas")
    hb2 = float(np.sum(np.abs(h_b) ** 2))
    if hb2 == 0.0:
        raise DomainError("legitimate channel vector is zero")
    if len(h_e_list) == 0:
        raise DomainError("at least one adversary channel is required")
    w_d = h_b / math.sqrt(hb2)

    gains = [float(np.sum(np.abs(np.asarray(h))**2)) for h in h_e_list]
    h_star = np.asarray(h_e_list[int(np.argmax(gains))], dtype=complex)
    proj = h_star - (np.vdot(h_b, h_star) / hb2) * h_b
    pn2 = float(np.sum(np.abs(proj) ** 2))
    if pn2 > _PARALLEL_TOL * max(gains):
        w_an = proj / math.sqrt(pn2)
    else:
        w_an = _orthogonal_fallback(h_b, hb2)
    return w_d, w_an


def solve_power_pair(
    draw: ChannelDraw, scenario: FadingScenario, th: Thresholds
) -> BeamformingSolution:
    """Exact minimum of p_d + p_an for one realization.

    The objective and every adversary constraint are increasing in p_d, so
    p_d takes its lower bound sigma^2 c1 / ||h_b||^2; each adversary then
    imposes a lower bound on p_an, and p_an takes the largest of them
    (floored at zero).  Infeasible only if some adversary receives no
    artificial noise at all yet still decodes too well.
    """
    if scenario.antennas < 2:
        raise NoNullSpaceError("solve_power_pair needs at least two antennas")
    if scenario.interference != 0.0:
        raise DomainError("the beamforming model has no external jamming term")
    h_b = scenario.alpha_b * draw.h_b
    h_e = [scenario.alpha_e[e] * draw.h_e[e] for e in range(scenario.n_adversaries)]
    w_d, w_an = design_beamformers(h_b, h_e)

    c1 = q_inv(th.t1) ** 2
    c2 = q_inv(th.t2) ** 2
    s2 = scenario.sigma2
    hb2 = float(np.sum(np.abs(h_b) ** 2))
    p_d = s2 * c1 / hb2

    p_an = 0.0
    for e, h in enumerate(h_e):
        g_de = abs(np.vdot(h, w_d)) ** 2
        g_ae = abs(np.vdot(h, w_an)) ** 2
        excess = g_de * p_d - c2 * s2
        if excess > 0.0:
            if g_ae == 0.0:
                return BeamformingSolution(
                    w_d=w_d, w_an=w_an, p_d=p_d, p_an=math.inf,
                    feasible=False, blocking_adversary=e,
                )
            p_an = max(p_an, excess / (c2 * g_ae))
    return BeamformingSolution(w_d=w_d, w_an=w_an, p_d=p_d, p_an=p_an, feasible=True)


def _beamforming_batches(scenario, th, trials, stream, workers, reduce_batch):
    if trials < 1:
        raise DomainError("trials must be >= 1")
    if stream is None:
        raise DomainError("an explicit RandomStream is required for reproducibility")
    if scenario.antennas < 2:
        raise NoNullSpaceError("beamforming Monte Carlo needs at least two antennas")
    c1 = q_inv(th.t1) ** 2
    c2 = q_inv(th.t2) ** 2
    m = scenario.antennas
    n_adv = scenario.n_adversaries
    alpha_e = np.asarray(scenario.alpha_e)

    full, rem = divmod(trials, MC_BATCH)
    sizes = [MC_BATCH] * full + ([rem] if rem else [])
    children = stream.split(len(sizes))

    def run(j: int):
        n = sizes[j]
        hb_re, hb_im, he_re, he_im = draw_channel_matrix(
            children[j].generator, n, m, n_adv
        )
        hb_re = hb_re * scenario.alpha_b
        hb_im = hb_im * scenario.alpha_b
        he_re = he_re * alpha_e[None, :, None]
        he_im = he_im * alpha_e[None, :, None]
        p_total = np.empty(n)
        feasible = np.empty(n, dtype=np.uint8)
        bad = _kernels.beamforming_batch(
            hb_re, hb_im, he_re, he_im, c1, c2, scenario.sigma2, p_total, feasible
        )
        return reduce_batch(bad, p_total, feasible)

    if workers > 1 and len(sizes) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(run, range(len(sizes))))
    return [run(j) for j in range(len(sizes))]


def outage_beamforming_mc(
    scenario: FadingScenario,
    th: Thresholds,
    trials: int = 1_000_000,
    stream: RandomStream = None,
    workers: int = 1,
) -> OutageResult:
    """Fraction of channel draws whose power pair is infeasible.

    There is no closed form for this scenario; Monte Carlo is the only
    route.  With the noise beam in the legitimate null space the program is
    almost surely feasible, so estimates near zero are expected.
    """
    results = _beamforming_batches(
        scenario, th, trials, stream, workers,
        reduce_batch=lambda bad, p, f: bad,
    )
    p_hat = sum(results) / trials
    return OutageResult(
        mc_estimate=p_hat, mc_halfwidth=halfwidth_95(p_hat, trials), trials=trials
    )


def power_pair_mc_stats(
    scenario: FadingScenario,
    th: Thresholds,
    trials: int,
    stream: RandomStream,
    workers: int = 1,
) -> dict:
    """Aggregate total-power statistics over feasible draws.

    Returns feasible/infeasible counts plus the sums of p_total and of
    10 log10(p_total / sigma^2), reduced deterministically in batch order.
    """
    s2 = scenario.sigma2

    def reduce_batch(bad, p_total, feasible):
        mask = feasible == 1
        p = p_total[mask]
        return bad, int(p.size), float(np.sum(p)), float(np.sum(10.0 * np.log10(p / s2)))

    parts = _beamforming_batches(scenario, th, trials, stream, workers, reduce_batch)
    return {
        "infeasible": sum(p[0] for p in parts),
        "feasible": sum(p[1] for p in parts),
        "sum_power": math.fsum(p[2] for p in parts),
        "sum_power_db": math.fsum(p[3] for p in parts),
        "trials": trials,
    }
