"""Experiment pipelines, Monte Carlo batches and their reporting."""

from .aggregate import (
    AGGREGATE_COLUMNS,
    aggregate_estimates,
    aggregate_tracking,
    error_rises_after_changes,
    low_uncertainty_error,
    summarize,
    summary_frame,
)
from .montecarlo import BatchError, MonteCarloRunner, default_jobs, run_montecarlo
from .pipeline import (
    TRACK_VARIANTS,
    RunResult,
    TrackingImpact,
    assess_all,
    correct_stream,
    merge_streams,
    offset_changes,
    oracle_correct,
    run_single,
    settled_windows,
    steady_mask,
    track_measurements,
    track_run,
    transient_windows,
)
from .plots import plot_error_uncertainty, plot_offsets, plot_velocity
from .records import (
    ESTIMATE_COLUMNS,
    estimates_frame,
    frame_to_estimates,
    trajectory_frame,
    verdicts_frame,
)

__all__ = [
    "AGGREGATE_COLUMNS",
    "ESTIMATE_COLUMNS",
    "TRACK_VARIANTS",
    "BatchError",
    "MonteCarloRunner",
    "RunResult",
    "TrackingImpact",
    "aggregate_estimates",
    "aggregate_tracking",
    "error_rises_after_changes",
    "assess_all",
    "correct_stream",
    "default_jobs",
    "estimates_frame",
    "frame_to_estimates",
    "low_uncertainty_error",
    "merge_streams",
    "offset_changes",
    "oracle_correct",
    "plot_error_uncertainty",
    "plot_offsets",
    "plot_velocity",
    "run_montecarlo",
    "run_single",
    "settled_windows",
    "steady_mask",
    "summarize",
    "summary_frame",
    "track_measurements",
    "track_run",
    "trajectory_frame",
    "transient_windows",
    "verdicts_frame",
]
