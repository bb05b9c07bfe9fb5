"""Wireless scenario model: path losses, Rayleigh draws, random streams.

Channel coefficients are i.i.d. circularly symmetric complex Gaussians with
unit variance (real/imag parts N(0, 1/2) each), so every power gain |h|^2
is exponential with mean one.  All randomness flows through
:class:`RandomStream`, a counter-based Philox generator with deterministic
splitting, which is what makes parallel Monte Carlo reproducible for any
worker count.
"""

import math
from dataclasses import dataclass, field
from typing import Sequence, Union

import numpy as np

from .errors import DomainError

SQRT_HALF = math.sqrt(0.5)


@dataclass(frozen=True)
class FadingScenario:
    """Static description of one link: noise, path losses, adversary set.

    sigma2        additive noise power at every receiver (linear watts)
    alpha_b       legitimate-user path loss, linear amplitude factor
    alpha_e       per-adversary path losses, length E >= 1
    interference  jamming power I seen by the legitimate receiver in the
                  unknown-mode scenario (linear watts); 0 elsewhere
    antennas      transmit antennas M (beamforming needs M > 1)
    """

    sigma2: float
    alpha_b: float
    alpha_e: tuple = (1.0,)
    interference: float = 0.0
    antennas: int = 1

    def __post_init__(self):
        object.__setattr__(self, "alpha_e", tuple(float(a) for a in self.alpha_e))
        if not (math.isfinite(self.sigma2) and self.sigma2 > 0.0):
            raise DomainError(f"sigma2 must be positive, got {self.sigma2!r}")
        if not (math.isfinite(self.alpha_b) and self.alpha_b > 0.0):
            raise DomainError(f"alpha_b must be positive, got {self.alpha_b!r}")
        if len(self.alpha_e) < 1:
            raise DomainError("at least one adversary path loss is required")
        for a in self.alpha_e:
            if not (math.isfinite(a) and a > 0.0):
                raise DomainError(f"adversary path losses must be positive, got {a!r}")
        if not (math.isfinite(self.interference) and self.interference >= 0.0):
            raise DomainError(f"interference must be >= 0, got {self.interference!r}")
        if int(self.antennas) != self.antennas or self.antennas < 1:
            raise DomainError(f"antennas must be a positive integer, got {self.antennas!r}")

    @property
    def n_adversaries(self) -> int:
        return len(self.alpha_e)


@dataclass
class ChannelDraw:
    """One realization: h_b has shape (M,), h_e has shape (E, M)."""

    h_b: np.ndarray
    h_e: np.ndarray

    def power_gain_b(self) -> float:
        """|h_B|^2 for a single-antenna draw."""
        return float(np.abs(self.h_b[0]) ** 2)

    def power_gain_e(self, e: int) -> float:
        return float(np.abs(self.h_e[e, 0]) ** 2)


class RandomStream:
    """Reproducible, splittable random source (Philox counter generator).

    The same seed always produces the same draw sequence, and ``split``
    derives independent child streams deterministically, so work can be
    partitioned across workers without changing any result.
    """

    def __init__(self, seed: int):
        if not (0 <= int(seed) < 2**64):
            raise DomainError("seed must fit in 64 bits")
        self.seed = int(seed)
        self._seq = np.random.SeedSequence(self.seed)
        self._gen = np.random.Generator(np.random.Philox(self._seq))

    @classmethod
    def _from_seq(cls, seq: np.random.SeedSequence) -> "RandomStream":
        obj = cls.__new__(cls)
        obj.seed = None
        obj._seq = seq
        obj._gen = np.random.Generator(np.random.Philox(seq))
        return obj

    @property
    def generator(self) -> np.random.Generator:
        return self._gen

    def split(self, n: int) -> list:
        """Derive ``n`` independent child streams.  Must be called before
        workers start; the split itself is the only stateful step."""
        return [RandomStream._from_seq(s) for s in self._seq.spawn(int(n))]


def draw_channels(scenario: FadingScenario, stream: RandomStream) -> ChannelDraw:
    """Draw one channel realization for every user.

    Real and imaginary parts are independent N(0, 1/2), giving unit-variance
    complex entries and exponential(1) power gains.
    """
    gen = stream.generator
    m = scenario.antennas
    e = scenario.n_adversaries
    h_b = (gen.standard_normal(m) + 1j * gen.standard_normal(m)) * SQRT_HALF
    h_e = (gen.standard_normal((e, m)) + 1j * gen.standard_normal((e, m))) * SQRT_HALF
    return ChannelDraw(h_b=h_b, h_e=h_e)


def snr_of(
    draw: ChannelDraw,
    scenario: FadingScenario,
    power: float,
    user: Union[str, int],
) -> float:
    """SNR of one user at the given transmit power.

    ``user`` is ``"legitimate"`` or an adversary index.  The legitimate
    denominator includes the configured interference power (unknown-mode
    scenarios); adversaries are assumed able to cancel it.
    """
    if power < 0.0:
        raise DomainError(f"power must be >= 0, got {power!r}")
    if user == "legitimate":
        gain = scenario.alpha_b**2 * float(np.sum(np.abs(draw.h_b) ** 2))
        noise = scenario.sigma2 + scenario.interference
    else:
        e = int(user)
        if not (0 <= e < scenario.n_adversaries):
            raise DomainError(f"adversary index {e} out of range")
        gain = scenario.alpha_e[e] ** 2 * float(np.sum(np.abs(draw.h_e[e]) ** 2))
        noise = scenario.sigma2
    return gain * power / noise


def draw_power_gains(
    gen: np.random.Generator, n: int, n_adversaries: int
) -> tuple:
    """Vectorized |h|^2 draws for Monte Carlo batches.

    Returns ``(gain_b, gains_e)`` with shapes (n,) and (n, E).  Gains are
    obtained by squaring complex-Gaussian draws rather than sampling
    exponentials directly, so Monte Carlo stays an independent check on the
    exponential-gain closed forms.
    """
    z = gen.standard_normal((n, 2 * (n_adversaries + 1))) * SQRT_HALF
    gain_b = z[:, 0] ** 2 + z[:, 1] ** 2
    gains_e = z[:, 2::2] ** 2 + z[:, 3::2] ** 2
    return gain_b, gains_e


def draw_channel_matrix(
    gen: np.random.Generator, n: int, m: int, n_adversaries: int
) -> tuple:
    """Batched channel vectors for beamforming Monte Carlo.

    Returns ``(hb_re, hb_im, he_re, he_im)`` with shapes (n, M) and
    (n, E, M), unscaled by path loss.
    """
    hb_re = gen.standard_normal((n, m)) * SQRT_HALF
    hb_im = gen.standard_normal((n, m)) * SQRT_HALF
    he_re = gen.standard_normal((n, n_adversaries, m)) * SQRT_HALF
    he_im = gen.standard_normal((n, n_adversaries, m)) * SQRT_HALF
    return hb_re, hb_im, he_re, he_im
