"""Gaussian tail function, its inverse, and exponential-family densities.

Everything here is a pure scalar function; randomness lives in
:mod:`bepalloc.channel`.  The Gaussian tail (Q) and its inverse dominate
the accuracy of every closed-form power in the package, since the optimal
powers are quadratic in Q^-1.
"""

import math
from typing import Sequence

from scipy.special import ndtri

from .errors import DegenerateRatesError, DomainError

_SQRT_HALF = math.sqrt(0.5)
_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)

# Newton iterations for q_inv never need to leave this bracket: Q(x) is
# exactly 0.0/1.0 in double precision beyond |x| ~ 39.
_QINV_LO = -40.0
_QINV_HI = 40.0


def q_func(x: float) -> float:
    """Gaussian tail probability Q(x) = P(N(0,1) > x).

    Evaluated through the complementary error function,
    Q(x) = erfc(x / sqrt(2)) / 2, which is accurate to a few ulp over the
    whole real line.
    """
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"q_func requires a finite argument, got {x!r}")
    return 0.5 * math.erfc(x * _SQRT_HALF)


def _std_normal_pdf(x: float) -> float:
    return math.exp(-0.5 * x * x) * _INV_SQRT_2PI


def q_inv(p: float) -> float:
    """Inverse of :func:`q_func` on the open unit interval.

    Starts from the normal quantile and polishes with safeguarded Newton
    steps (bisection fallback if an iterate leaves the bracket), so the
    roundtrip q_func(q_inv(p)) reproduces p to ~1e-15 relative.
    """
    p = float(p)
    if not (0.0 < p < 1.0):
        raise DomainError(f"q_inv requires 0 < p < 1, got {p!r}")
    x = -float(ndtri(p))
    lo, hi = _QINV_LO, _QINV_HI
    for _ in range(4):
        f = q_func(x) - p
        if f == 0.0:
            break
        # maintain a bracket: Q is decreasing, so f > 0 means x too small
        if f > 0.0:
            lo = max(lo, x)
        else:
            hi = min(hi, x)
        d = _std_normal_pdf(x)
        if d > 0.0:
            x_new = x + f / d
        else:
            x_new = math.inf  # force bisection
        if x_new == x:
            break  # step below one ulp: converged
        if not (lo < x_new < hi):
            x_new = 0.5 * (lo + hi)
        if abs(x_new - x) <= 1e-15 * max(1.0, abs(x)):
            x = x_new
            break
        x = x_new
    return x


def chernoff_q(x: float) -> float:
    """Exponential upper bound on the Gaussian tail: exp(-x^2/2) / 2.

    Only valid as a bound for x >= 0; negative arguments are rejected.
    """
    x = float(x)
    if not math.isfinite(x) or x < 0.0:
        raise DomainError(f"chernoff_q requires x >= 0, got {x!r}")
    return 0.5 * math.exp(-0.5 * x * x)


def _check_rates(rates: Sequence[float]) -> list:
    lams = [float(r) for r in rates]
    if not lams:
        raise DomainError("at least one exponential rate is required")
    for lam in lams:
        if not math.isfinite(lam) or lam <= 0.0:
            raise DomainError(f"exponential rates must be positive, got {lam!r}")
    return lams


def max_exp_pdf(rates: Sequence[float], z: float) -> float:
    """Density of the maximum of independent exponential variables.

    For rates (l_1, ..., l_E) at point z >= 0:

        f(z) = sum_e l_e exp(-l_e z) prod_{i != e} (1 - exp(-l_i z))

    Repeated rates are fine here (unlike the hypoexponential case).
    """
    lams = _check_rates(rates)
    z = float(z)
    if not math.isfinite(z) or z < 0.0:
        raise DomainError(f"max_exp_pdf requires z >= 0, got {z!r}")
    terms = []
    for e, lam in enumerate(lams):
        t = lam * math.exp(-lam * z)
        for i, other in enumerate(lams):
            if i != e:
                t *= -math.expm1(-other * z)
        terms.append(t)
    return math.fsum(terms)


def hypoexp_pdf(rates: Sequence[float], w: float) -> float:
    """Density of a sum of independent exponentials with distinct rates.

        f(w) = (prod_e l_e) sum_e exp(-l_e w) / prod_{i != e} (l_i - l_e)

    The partial-fraction weights divide by rate differences, so rates that
    coincide within 1e-9 relative are rejected rather than silently
    perturbed; callers should fall back to sampling in that case.
    """
    lams = _check_rates(rates)
    w = float(w)
    if not math.isfinite(w) or w < 0.0:
        raise DomainError(f"hypoexp_pdf requires w >= 0, got {w!r}")
    assert_distinct_rates(lams, rel_tol=1e-9)
    prod_l = math.prod(lams)
    terms = []
    for e, lam in enumerate(lams):
        denom = math.prod(other - lam for i, other in enumerate(lams) if i != e)
        terms.append(math.exp(-lam * w) / denom)
    value = prod_l * math.fsum(terms)
    # exact value is nonnegative; cancellation may leave a tiny residue
    return max(0.0, value)


def assert_distinct_rates(rates: Sequence[float], rel_tol: float) -> None:
    """Raise :class:`DegenerateRatesError` if any two rates agree within
    ``rel_tol`` relative."""
    lams = sorted(float(r) for r in rates)
    for a, b in zip(lams, lams[1:]):
        if b - a <= rel_tol * max(abs(a), abs(b)):
            raise DegenerateRatesError(
                f"rates {a!r} and {b!r} closer than rel {rel_tol:g}"
            )
