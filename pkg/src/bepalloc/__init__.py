"""BEP-constrained power allocation for physical-layer security links.

Instead of sizing transmit power for a secrecy-rate target, every solver
here works from two bit-error-probability thresholds: a ceiling for the
legitimate receiver and a floor for the adversaries.  The package provides
the closed-form minimum powers and feasibility tests for four adversary
scenarios (single, multiple, unknown-mode, cooperating), the matching
analytic outage probabilities, artificial-noise beamforming for
multi-antenna transmitters, a block-code threshold transformation, and a
reproducible Monte Carlo engine that cross-validates every closed form.
"""

from ._kernels import backend_name
from .allocation import (
    AllocationResult,
    Thresholds,
    allocate_bpsk_single,
    allocate_chernoff,
    allocate_mrc,
    allocate_multi_eve,
    allocate_qpsk_single,
    allocate_secrecy_baseline,
    allocate_unknown_mode,
    secrecy_rate,
)
from .beamforming import (
    BeamformingSolution,
    design_beamformers,
    outage_beamforming_mc,
    solve_power_pair,
)
from .channel import ChannelDraw, FadingScenario, RandomStream, draw_channels, snr_of
from .coding import (
    BlockCodeParams,
    block_fail_prob,
    block_failures_mc,
    coded_outage,
    effective_thresholds,
)
from .errors import (
    BepAllocError,
    CodeDesignError,
    ConfigError,
    DegenerateRatesError,
    DomainError,
    NoNullSpaceError,
)
from .modulation import (
    ErrorModel,
    bep_bpsk,
    bep_bpsk_chernoff,
    bep_qpsk,
    sep_min_distance_bound,
    sep_qpsk,
)
from .outage import (
    OutageResult,
    evaluate_outage,
    outage_monte_carlo,
    outage_mrc_analytic,
    outage_multi_analytic,
    outage_single_analytic,
    outage_unknown_mode_analytic,
)
from .special_math import chernoff_q, hypoexp_pdf, max_exp_pdf, q_func, q_inv

__version__ = "0.1.0"

__all__ = [
    "AllocationResult",
    "BeamformingSolution",
    "BepAllocError",
    "BlockCodeParams",
    "ChannelDraw",
    "CodeDesignError",
    "ConfigError",
    "DegenerateRatesError",
    "DomainError",
    "ErrorModel",
    "FadingScenario",
    "NoNullSpaceError",
    "OutageResult",
    "RandomStream",
    "Thresholds",
    "allocate_bpsk_single",
    "allocate_chernoff",
    "allocate_mrc",
    "allocate_multi_eve",
    "allocate_qpsk_single",
    "allocate_secrecy_baseline",
    "allocate_unknown_mode",
    "backend_name",
    "bep_bpsk",
    "bep_bpsk_chernoff",
    "bep_qpsk",
    "block_fail_prob",
    "block_failures_mc",
    "chernoff_q",
    "coded_outage",
    "design_beamformers",
    "draw_channels",
    "effective_thresholds",
    "evaluate_outage",
    "hypoexp_pdf",
    "max_exp_pdf",
    "outage_beamforming_mc",
    "outage_monte_carlo",
    "outage_mrc_analytic",
    "outage_multi_analytic",
    "outage_single_analytic",
    "outage_unknown_mode_analytic",
    "q_func",
    "q_inv",
    "secrecy_rate",
    "sep_min_distance_bound",
    "sep_qpsk",
    "snr_of",
    "solve_power_pair",
    "__version__",
]
