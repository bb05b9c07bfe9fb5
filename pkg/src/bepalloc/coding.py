"""Block-code performance model and threshold transformation.

The code is abstracted by its block length n and correction capability t
under bounded-distance decoding: a block fails exactly when more than t of
its n bits flip.  No generator or parity-check machinery is modelled, and
the adversary is assumed to know the code, so the code contributes no
secrecy by itself; it only moves the raw-BEP operating points.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.stats import binom

from . import _kernels
from .allocation import Thresholds
from .channel import RandomStream
from .errors import CodeDesignError, DomainError

# chunk size (in random bits) for the bit-flip Monte Carlo
_MC_BITS_PER_CHUNK = 1 << 22


@dataclass(frozen=True)
class BlockCodeParams:
    """Block code of length ``n`` correcting up to ``t`` errors, plus the
    block-level targets used to derive raw-BEP thresholds.

    ``target_block_fail_legit`` caps the legitimate user's block failure
    probability; ``target_block_success_eve`` caps the probability that an
    adversary decodes a block correctly.  ``n=1, t=0`` degenerates to the
    uncoded system.
    """

    n: int
    t: int
    target_block_fail_legit: float = 0.01
    target_block_success_eve: float = 0.01

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise DomainError(f"block length must be a positive integer, got {self.n!r}")
        if int(self.t) != self.t or not (0 <= self.t < self.n / 2):
            raise DomainError(f"correction capability must satisfy 0 <= t < n/2, got {self.t!r}")
        for name, v in (
            ("target_block_fail_legit", self.target_block_fail_legit),
            ("target_block_success_eve", self.target_block_success_eve),
        ):
            if not (math.isfinite(v) and 0.0 < v < 1.0):
                raise DomainError(f"{name} must lie in (0, 1), got {v!r}")


def block_fail_prob(p: float, code: BlockCodeParams) -> float:
    """Probability that a block of n i.i.d. bits with flip probability p
    has more than t errors (bounded-distance decoding failure).

    Evaluated through the regularized incomplete beta function, which stays
    accurate for tiny p where the naive 1 - sum form would cancel.
    """
    p = float(p)
    if not (0.0 <= p <= 1.0):
        raise DomainError(f"bit error probability must lie in [0, 1], got {p!r}")
    return float(binom.sf(code.t, code.n, p))


def _invert_block_fail(code: BlockCodeParams, target: float) -> float:
    # block_fail_prob is strictly increasing in p for t < n
    lo, hi = 0.0, 1.0
    for _ in range(100):
        mid = 0.5 * (lo + hi)
        if block_fail_prob(mid, code) < target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def effective_thresholds(code: BlockCodeParams) -> Thresholds:
    """Raw-BEP thresholds that realize the code's block-level targets.

    p1 is the largest raw BEP keeping the legitimate block failure at or
    below its target; p2 is the smallest raw BEP keeping the adversary's
    block success at or below its target.  Both are roots of the monotone
    block-failure curve, found by bisection.
    """
    p1 = _invert_block_fail(code, code.target_block_fail_legit)
    p2 = _invert_block_fail(code, 1.0 - code.target_block_success_eve)
    if not (0.0 < p1 < 0.5 and 0.0 < p2 < 0.5):
        raise CodeDesignError(
            f"(n={code.n}, t={code.t}) maps the targets to raw BEPs "
            f"({p1:.6g}, {p2:.6g}) outside (0, 0.5)"
        )
    if not p1 < p2:
        raise CodeDesignError(
            f"targets give p1={p1:.6g} >= p2={p2:.6g}; no usable threshold pair"
        )
    return Thresholds(t1=p1, t2=p2)


def coded_outage(
    scenario,
    code: BlockCodeParams,
    combiner: str = "max",
    trials: int = None,
    stream: RandomStream = None,
    workers: int = 1,
):
    """Outage probability with the bit thresholds replaced by the code's
    effective raw-BEP pair.  Analytic where the scenario has a closed form,
    Monte Carlo when ``trials`` is given."""
    from .outage import evaluate_outage

    th = effective_thresholds(code)
    return evaluate_outage(scenario, th, combiner, trials, stream, workers)


def block_failures_mc(
    code: BlockCodeParams,
    p: float,
    blocks: int,
    stream: RandomStream,
    workers: int = 1,
) -> int:
    """Bit-flip Monte Carlo: number of failed blocks out of ``blocks``.

    Every bit is flipped independently with probability ``p``; a block
    fails when more than t bits flip.  This is the independent check on
    :func:`block_fail_prob`.
    """
    if blocks < 1:
        raise DomainError("blocks must be >= 1")
    if not (0.0 <= p <= 1.0):
        raise DomainError(f"bit error probability must lie in [0, 1], got {p!r}")
    rows = max(1, _MC_BITS_PER_CHUNK // code.n)
    full, rem = divmod(blocks, rows)
    sizes = [rows] * full + ([rem] if rem else [])
    children = stream.split(len(sizes))

    def run(j: int) -> int:
        u = children[j].generator.random((sizes[j], code.n))
        return _kernels.count_block_failures(u, p, code.t)

    if workers > 1 and len(sizes) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return sum(pool.map(run, range(len(sizes))))
    return sum(run(j) for j in range(len(sizes)))
