"""Experiment sweeps, config ingestion, and CSV reporting."""

from .config import ExperimentConfig, config_hash, load_config, parse_config_text
from .csvio import render_csv, write_csv
from .runners import (
    RUNNERS,
    run_fig1,
    run_fig2,
    run_fig3,
    run_fig4,
    run_fig5,
    run_fig6,
    run_fig7,
    run_fig8,
    run_fig9,
    run_fig10,
    run_report,
)

__all__ = [
    "ExperimentConfig",
    "RUNNERS",
    "config_hash",
    "load_config",
    "parse_config_text",
    "render_csv",
    "write_csv",
    "run_fig1",
    "run_fig2",
    "run_fig3",
    "run_fig4",
    "run_fig5",
    "run_fig6",
    "run_fig7",
    "run_fig8",
    "run_fig9",
    "run_fig10",
    "run_report",
]
