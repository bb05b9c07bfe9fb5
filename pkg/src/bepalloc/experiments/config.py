"""Experiment configuration: a flat key = value file with strict keys.

Defaults reproduce the reference simulation setup (noise power 0.01,
adversary floor 0.05, up to three adversaries, four antennas, block code
n=63 / t=1).  Unknown keys are errors, not warnings: a typo must never
silently fall back to a default.
"""

import hashlib
import math
from dataclasses import dataclass, field, fields, replace
from pathlib import Path

from ..channel import FadingScenario
from ..errors import ConfigError


@dataclass(frozen=True)
class ExperimentConfig:
    # scenario
    sigma2: float = 0.01
    alpha_b: float = 1.0
    alpha_e: tuple = (1.0, 0.8, 1.25)
    interference: float = 0.01
    antennas: int = 4
    # thresholds and sweep grid
    t2: float = 0.05
    t1_min: float = 0.005
    t1_max: float = 0.3
    t1_points: int = 12
    # deterministic single-link curves (effective power gains alpha^2 |h|^2)
    gain_b: float = 4.0
    gain_e: float = 1.0
    # transmit power grid, dB relative to sigma2
    power_db_min: float = -10.0
    power_db_max: float = 40.0
    power_points: int = 26
    # baseline and coding
    r_min: float = 2.0
    code_n: int = 63
    code_t: int = 1
    block_fail_target: float = 0.01
    block_success_target: float = 0.01
    # validation grid for the report command
    report_t1: tuple = (0.01, 0.05, 0.1)
    # execution
    trials: int = 1_000_000
    seed: int = 12345
    workers: int = 1
    out: str = ""

    def validate(self) -> "ExperimentConfig":
        try:
            FadingScenario(
                sigma2=self.sigma2,
                alpha_b=self.alpha_b,
                alpha_e=self.alpha_e,
                interference=self.interference,
                antennas=self.antennas,
            )
        except Exception as exc:
            raise ConfigError(f"invalid scenario parameters: {exc}") from exc
        if not (0.0 < self.t2 < 0.5):
            raise ConfigError(f"t2 must lie in (0, 0.5), got {self.t2!r}")
        if not (0.0 < self.t1_min < self.t1_max < 0.5):
            raise ConfigError("t1 grid must satisfy 0 < t1_min < t1_max < 0.5")
        if self.t1_points < 2:
            raise ConfigError("t1_points must be >= 2")
        if self.power_points < 2:
            raise ConfigError("power_points must be >= 2")
        if not (self.gain_b > 0.0 and self.gain_e > 0.0):
            raise ConfigError("gain_b and gain_e must be positive")
        if self.r_min <= 0.0:
            raise ConfigError("r_min must be positive")
        if self.trials < 1:
            raise ConfigError("trials must be >= 1")
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")
        if not (0 <= self.seed < 2**64):
            raise ConfigError("seed must fit in 64 bits")
        return self


_FIELD_TYPES = {f.name: f.type for f in fields(ExperimentConfig)}
# convenience keys: path losses given as attenuation in dB, alpha^2 = 10^(-dB/10)
_DB_KEYS = {"alpha_b_db": "alpha_b", "alpha_e_db": "alpha_e"}


def _parse_scalar(key: str, raw: str):
    raw = raw.strip()
    ftype = _FIELD_TYPES.get(key, float)
    if ftype is int:
        try:
            return int(raw)
        except ValueError as exc:
            raise ConfigError(f"{key} expects an integer, got {raw!r}") from exc
    if ftype is tuple:
        try:
            return tuple(float(tok) for tok in raw.split(",") if tok.strip())
        except ValueError as exc:
            raise ConfigError(f"{key} expects comma-separated numbers, got {raw!r}") from exc
    if ftype is str:
        return raw
    try:
        return float(raw)
    except ValueError as exc:
        raise ConfigError(f"{key} expects a number, got {raw!r}") from exc


def parse_config_text(text: str) -> dict:
    """Parse ``key = value`` lines into an override dict.

    ``#`` starts a comment; blank lines are ignored; unknown keys raise.
    """
    overrides = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {line!r}")
        key, raw = (part.strip() for part in stripped.split("=", 1))
        if key in _DB_KEYS:
            target = _DB_KEYS[key]
            if target == "alpha_b":
                overrides[target] = 10.0 ** (-float(raw) / 20.0)
            else:
                overrides[target] = tuple(
                    10.0 ** (-float(tok) / 20.0) for tok in raw.split(",") if tok.strip()
                )
            continue
        if key not in _FIELD_TYPES:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        if key in overrides:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        overrides[key] = _parse_scalar(key, raw)
    return overrides


def load_config(path=None, **cli_overrides) -> ExperimentConfig:
    """Defaults, then the config file, then explicit CLI overrides."""
    cfg = ExperimentConfig()
    if path is not None:
        text = Path(path).read_text()
        cfg = replace(cfg, **parse_config_text(text))
    cli = {k: v for k, v in cli_overrides.items() if v is not None}
    if cli:
        cfg = replace(cfg, **cli)
    return cfg.validate()


def config_hash(cfg: ExperimentConfig) -> str:
    """Stable digest of everything that can influence emitted values.

    ``out`` and ``workers`` are excluded: the output location is not part
    of the experiment, and worker count must never change a number.
    """
    parts = []
    for f in sorted(_FIELD_TYPES):
        if f in ("out", "workers"):
            continue
        v = getattr(cfg, f)
        if isinstance(v, float):
            parts.append(f"{f}={v:.12g}")
        elif isinstance(v, tuple):
            parts.append(f"{f}=" + ",".join(f"{x:.12g}" for x in v))
        else:
            parts.append(f"{f}={v}")
    return hashlib.sha256(";".join(parts).encode()).hexdigest()[:16]
