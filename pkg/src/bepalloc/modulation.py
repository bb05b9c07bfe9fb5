"""Per-realization error-probability models.

One scalar power/energy value is carried throughout (the two are treated
as identical), so every function maps an SNR directly to a probability.
"""

import math
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError
from .special_math import chernoff_q, q_func

_KINDS = ("bpsk_exact", "qpsk_exact", "qpsk_approx", "min_distance", "chernoff_bpsk")


def _check_snr(snr: float) -> float:
    snr = float(snr)
    if not math.isfinite(snr) or snr < 0.0:
        raise DomainError(f"snr must be >= 0, got {snr!r}")
    return snr


def bep_bpsk(snr: float) -> float:
    """BPSK bit error probability Q(sqrt(snr))."""
    return q_func(math.sqrt(_check_snr(snr)))


def bep_bpsk_chernoff(snr: float) -> float:
    """Chernoff-bound version of the BPSK BEP: exp(-snr/2) / 2."""
    return chernoff_q(math.sqrt(_check_snr(snr)))


def sep_qpsk(snr: float) -> float:
    """QPSK symbol error probability 2Q(sqrt(snr/2)) - Q(sqrt(snr/2))^2."""
    q = q_func(math.sqrt(_check_snr(snr) / 2.0))
    return 2.0 * q - q * q


def bep_qpsk(snr: float, approx: bool = False) -> float:
    """QPSK bit error probability under Gray mapping.

    The default is SEP/2 (the Gray-mapping relation taken at face value);
    ``approx=True`` drops the quadratic term, leaving Q(sqrt(snr/2)), which
    is the form the power allocator inverts.
    """
    if approx:
        return q_func(math.sqrt(_check_snr(snr) / 2.0))
    return 0.5 * sep_qpsk(snr)


def sep_min_distance_bound(d_min: float, sigma: float) -> float:
    """Union bound on SEP from the minimum constellation distance.

    Q(d_min / (2 sigma)) upper-bounds the symbol error probability of any
    constellation with minimum Euclidean distance d_min in noise with
    per-dimension deviation sigma.  An upper bound, not an exact SEP.
    """
    d_min = float(d_min)
    sigma = float(sigma)
    if not math.isfinite(d_min) or d_min <= 0.0:
        raise DomainError(f"d_min must be positive, got {d_min!r}")
    if not math.isfinite(sigma) or sigma <= 0.0:
        raise DomainError(f"sigma must be positive, got {sigma!r}")
    return q_func(d_min / (2.0 * sigma))


@dataclass(frozen=True)
class ErrorModel:
    """Named error-probability model, used by experiment configs.

    ``min_distance`` carries the constellation d_min; the other kinds are
    parameter-free.
    """

    kind: str
    d_min: Optional[float] = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise DomainError(f"unknown error model {self.kind!r}; expected one of {_KINDS}")
        if self.kind == "min_distance":
            if self.d_min is None or not (math.isfinite(self.d_min) and self.d_min > 0.0):
                raise DomainError("min_distance model requires d_min > 0")
        elif self.d_min is not None:
            raise DomainError(f"d_min is only meaningful for min_distance, not {self.kind!r}")

    def error_probability(self, snr: float = None, sigma: float = None) -> float:
        if self.kind == "bpsk_exact":
            return bep_bpsk(snr)
        if self.kind == "qpsk_exact":
            return bep_qpsk(snr)
        if self.kind == "qpsk_approx":
            return bep_qpsk(snr, approx=True)
        if self.kind == "chernoff_bpsk":
            return bep_bpsk_chernoff(snr)
        if sigma is None:
            raise DomainError("min_distance model needs the noise deviation sigma")
        return sep_min_distance_bound(self.d_min, sigma)
