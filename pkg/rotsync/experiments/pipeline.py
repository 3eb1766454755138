"""Single-run pipeline: simulate, estimate, correct and track."""

import logging
from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from ..assessment import (
    CorrectionOutcome,
    CorrectionSession,
    StampedMeasurement,
    SyncVerdict,
    assess,
    resolve_strategy,
)
from ..config.models import CorrectionStrategy, ExperimentConfig, TrackerConfig
from ..estimator import OffsetEstimate, estimate_series
from ..simulation import SimRun, simulate_run
from ..tracking import (
    MeasurementModel,
    ProcessModel,
    TrackPoint,
    initial_state,
    run_tracker,
    velocity_rmse,
)
from .records import estimates_frame

logger = logging.getLogger(__name__)

TRACK_VARIANTS = ("raw", "corrected", "oracle")

Window = Tuple[float, float]


def in_windows(stamp: float, windows: Sequence[Window]) -> bool:
    return any(start <= stamp < stop for start, stop in windows)


def windowed_rmse(
    points: Sequence[TrackPoint],
    windows: Sequence[Window],
    true_velocity: np.ndarray,
) -> float:
    """Velocity RMSE over the points stamped inside ``windows``; NaN if none are."""
    selected = [p for p in points if in_windows(p.timestamp, windows)]
    if not selected:
        return float("nan")
    return velocity_rmse(selected, true_velocity)


@dataclass
class TrackingImpact:
    """Tracker passes over raw, strategy-corrected and oracle-corrected stamps.

    ``settled`` are the stamp ranges where the estimator window has seen only the
    current offset; ``transient`` are the stretches right after each change.
    """

    raw: List[TrackPoint]
    corrected: List[TrackPoint]
    oracle: List[TrackPoint]
    settled: List[Window]
    transient: List[Window]
    true_velocity: np.ndarray
    counts: Dict[str, int] = field(default_factory=dict)

    def passes(self) -> Dict[str, List[TrackPoint]]:
        return {name: getattr(self, name) for name in TRACK_VARIANTS}

    def rmse(self, windows: Optional[Sequence[Window]] = None) -> Dict[str, float]:
        """Velocity RMSE of each pass inside ``windows`` (default: settled)."""
        windows = self.settled if windows is None else windows
        return {
            name: windowed_rmse(points, windows, self.true_velocity)
            for name, points in self.passes().items()
        }

    def transient_rmse(self) -> Dict[str, float]:
        return self.rmse(self.transient)



@dataclass
class RunResult:
    seed: int
    estimates: pd.DataFrame
    durations: np.ndarray  # seconds per estimate_offset call
    strategy: CorrectionStrategy
    rotation: np.ndarray  # sensor 1 rotation magnitudes
    steady: np.ndarray  # per estimate: window inside one offset stretch
    tracking: Optional[TrackingImpact] = None


def offset_changes(truth_offsets: np.ndarray) -> np.ndarray:
    """Coarse steps whose true offset differs from the step before."""
    truth = np.asarray(truth_offsets, dtype=float)
    return np.flatnonzero(np.diff(truth) != 0.0) + 1


def steady_mask(truth_offsets: np.ndarray, window_size: int) -> np.ndarray:
    """Steps whose estimator window, and the sample before it, share one offset."""
    truth = pd.Series(np.asarray(truth_offsets, dtype=float))
    span = truth.rolling(window_size + 1, min_periods=1)
    flat = (span.max() - span.min()).to_numpy() == 0.0
    return flat & (np.arange(len(truth)) >= window_size - 1)


def settled_windows(truth_offsets: np.ndarray, settle_steps: int) -> List[Window]:
    """Stamp ranges from ``settle_steps`` after each offset change to the next one.

    A range stops short of the next change by the largest offset plus one step, so
    stamps moved by a stale correction stay out. Without any change the last three
    quarters are used; a run that never settles falls back to everything after its
    first change.
    """
    truth = np.asarray(truth_offsets, dtype=float)
    n = len(truth)
    changes = offset_changes(truth)
    if not changes.size:
        return [(float(n // 4), float(n))]
    reach = int(np.ceil(np.max(np.abs(truth)))) + 1
    bounds = [int(c) for c in changes] + [n + reach]
    windows = []
    for begin, end in zip(bounds[:-1], bounds[1:]):
        start, stop = begin + settle_steps, end - reach
        if start < stop:
            windows.append((float(start), float(stop)))
    return windows or [(float(changes[0]), float(n))]


def transient_windows(truth_offsets: np.ndarray, settle_steps: int) -> List[Window]:
    """Stamp ranges from each offset change until it counts as settled."""
    truth = np.asarray(truth_offsets, dtype=float)
    bounds = [int(c) for c in offset_changes(truth)] + [len(truth)]
    return [
        (float(begin), float(min(begin + settle_steps, end)))
        for begin, end in zip(bounds[:-1], bounds[1:])
    ]



def merge_streams(
    *streams: Sequence[StampedMeasurement],
) -> List[StampedMeasurement]:
    """Stable time ordering; ties keep stream order, so sensor 1 goes first."""
    merged = [m for stream in streams for m in stream]
    return sorted(merged, key=lambda m: m.timestamp)


def oracle_correct(
    measurements: Sequence[StampedMeasurement], truth_offsets: np.ndarray
) -> List[StampedMeasurement]:
    """Move each stamp by the true offset of its coarse step."""
    corrected = []
    for m in measurements:
        offset = float(truth_offsets[int(round(m.timestamp))])
        corrected.append(replace(m, timestamp=m.timestamp - offset))
    return corrected


def track_measurements(
    measurements: Sequence[StampedMeasurement],
    tracker: TrackerConfig,
    step_duration: float = 1.0,
) -> List[TrackPoint]:
    """NCV tracker over a time-ordered stream, initialized from its first element."""
    if not measurements:
        return []
    sigma_r = tracker.measurement_noise
    pm = ProcessModel.from_position_noise(
        tracker.process_noise_position * step_duration, step_duration
    )
    mm = MeasurementModel.position(sigma_r)
    init = initial_state(measurements[0], sigma_r, tracker.initial_velocity_std)
    return run_tracker(measurements, init, pm, mm, step_duration)


def correct_stream(
    measurements: Sequence[StampedMeasurement],
    estimates: Sequence[OffsetEstimate],
    strategy: CorrectionStrategy,
) -> Tuple[List[StampedMeasurement], Dict[str, int]]:
    """Corrected, re-sorted sensor stream and the outcome counts."""
    session = CorrectionSession(strategy)
    for est in estimates:
        session.add_estimate(est)
    kept = session.apply_all(measurements)
    counts = {o.value: session.counts[o] for o in CorrectionOutcome}
    return merge_streams(kept), counts


def track_run(
    run: SimRun,
    estimates: Sequence[OffsetEstimate],
    strategy: CorrectionStrategy,
    config: ExperimentConfig,
) -> TrackingImpact:
    """Track the target three times: raw stamps, strategy and oracle correction."""
    dt = config.sim.step_duration
    corrected2, counts = correct_stream(run.measurements2, estimates, strategy)
    oracle2 = oracle_correct(run.measurements2, run.truth_offsets)
    raw = track_measurements(
        merge_streams(run.measurements1, run.measurements2), config.tracker, dt
    )
    corrected = track_measurements(
        merge_streams(run.measurements1, corrected2), config.tracker, dt
    )
    oracle = track_measurements(
        merge_streams(run.measurements1, oracle2), config.tracker, dt
    )
    return TrackingImpact(
        raw=raw,
        corrected=corrected,
        oracle=oracle,
        settled=settled_windows(run.truth_offsets, config.settle),
        transient=transient_windows(run.truth_offsets, config.settle),
        true_velocity=np.array([config.sim.target_speed, 0.0]),
        counts=counts,
    )


def assess_all(
    estimates: Sequence[OffsetEstimate], strategy: CorrectionStrategy
) -> List[SyncVerdict]:
    if strategy.u_max is None:
        return []
    return [assess(est, strategy.u_max, strategy.offset_min) for est in estimates]


def run_single(config: ExperimentConfig, seed: int) -> RunResult:
    """Simulate and evaluate one seeded run."""
    run = simulate_run(
        config.sim, config.profile, config.tracker.measurement_noise, seed
    )
    r1, r2 = run.magnitudes()
    durations: List[float] = []
    estimates = estimate_series(r1, r2, config.estimator, durations)

    strategy = config.strategy
    if estimates:
        strategy = resolve_strategy(
            strategy, estimates, config.estimator.uncertainty_epsilon
        )

    tracking = None
    if config.track:
        tracking = track_run(run, estimates, strategy, config)

    frame = estimates_frame(estimates, run.truth_offsets)
    steady = steady_mask(run.truth_offsets, config.estimator.window_size)
    logger.debug(f"Run with seed {seed}: {len(estimates)} estimates")
    return RunResult(
        seed=seed,
        estimates=frame,
        durations=np.asarray(durations),
        strategy=strategy,
        rotation=r1,
        steady=steady[frame["k"].to_numpy(dtype=int)],
        tracking=tracking,
    )
