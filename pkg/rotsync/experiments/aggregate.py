"""Deterministic reduction of Monte Carlo results."""

from typing import Dict, List, Sequence, Tuple

import numpy as np
import pandas as pd

from ..errors import ArgumentError
from .pipeline import TRACK_VARIANTS, RunResult

AGGREGATE_COLUMNS = [
    "k",
    "truth_offset",
    "estimate_median",
    "estimate_q25",
    "estimate_q75",
    "abs_error_median",
    "uncertainty_median",
    "steady",
]


def _stack(results: Sequence[RunResult], column: str) -> np.ndarray:
    return np.vstack([r.estimates[column].to_numpy(dtype=float) for r in results])


def aggregate_estimates(results: Sequence[RunResult]) -> pd.DataFrame:
    """Per-step quantiles across runs.

    Quantiles depend only on the multiset of values, so the table does not depend
    on the order runs finished in.
    """
    if not results:
        raise ArgumentError("Nothing to aggregate")
    steps = results[0].estimates["k"].to_numpy()
    for r in results[1:]:
        if not np.array_equal(r.estimates["k"].to_numpy(), steps):
            raise ArgumentError(f"Run with seed {r.seed} covers different steps")

    offsets = _stack(results, "offset")
    q25, median, q75 = np.quantile(offsets, [0.25, 0.5, 0.75], axis=0)
    return pd.DataFrame(
        {
            "k": steps,
            "truth_offset": np.median(_stack(results, "truth_offset"), axis=0),
            "estimate_median": median,
            "estimate_q25": q25,
            "estimate_q75": q75,
            "abs_error_median": np.median(_stack(results, "abs_error"), axis=0),
            "uncertainty_median": np.median(_stack(results, "uncertainty"), axis=0),
            "steady": np.all(np.vstack([r.steady for r in results]), axis=0),
        },
        columns=AGGREGATE_COLUMNS,
    )


def aggregate_tracking(results: Sequence[RunResult]) -> pd.DataFrame:
    """Median tracked speed per measurement index for every tracker pass.

    Discarding corrections can shorten a pass; indices are truncated to the
    shortest pass across runs.
    """
    tracked = [r.tracking for r in results if r.tracking is not None]
    if not tracked:
        return pd.DataFrame(columns=["index", "stamp", *TRACK_VARIANTS])
    length = min(len(points) for t in tracked for points in t.passes().values())
    columns: Dict[str, np.ndarray] = {
        "index": np.arange(length),
        "stamp": np.median(
            [[p.timestamp for p in t.raw[:length]] for t in tracked], axis=0
        ),
    }
    for name in TRACK_VARIANTS:
        speeds = [[p.state.speed for p in t.passes()[name][:length]] for t in tracked]
        columns[name] = np.median(np.array(speeds).reshape(len(tracked), -1), axis=0)
    return pd.DataFrame(columns)


def _median(values: Sequence[float]) -> float:
    finite = [v for v in values if np.isfinite(v)]
    return float(np.median(finite)) if finite else float("nan")


def summarize(results: Sequence[RunResult]) -> Dict[str, float]:
    """Batch-level figures: estimator runtime, error and tracking RMSE medians.

    Error figures over steady steps compare the low-uncertainty quartile with all
    steady steps; RMSE figures cover the settled and the transient stretches.
    """
    durations = np.concatenate([r.durations for r in results])
    errors = _stack(results, "abs_error")
    summary: Dict[str, float] = {
        "runs": float(len(results)),
        "runtime_median_ms": 0.0,
        "abs_error_median": 0.0,
    }
    if durations.size:
        summary["runtime_median_ms"] = float(np.median(durations) * 1e3)
    if errors.size:
        summary["abs_error_median"] = float(np.median(errors))
        aggregate = aggregate_estimates(results)
        steady = aggregate.loc[aggregate["steady"]]
        summary["abs_error_steady_median"] = _median(steady["abs_error_median"])
        summary["abs_error_low_uncertainty_median"] = (
            low_uncertainty_error(steady) if len(steady) else float("nan")
        )
    tracked = [r.tracking for r in results if r.tracking is not None]
    if tracked:
        settled = [t.rmse() for t in tracked]
        transient = [t.transient_rmse() for t in tracked]
        for name in TRACK_VARIANTS:
            summary[f"rmse_{name}_median"] = _median([r[name] for r in settled])
            summary[f"transient_rmse_{name}_median"] = _median(
                [r[name] for r in transient]
            )
        for outcome in tracked[0].counts:
            total = sum(t.counts[outcome] for t in tracked)
            summary[f"{outcome}_total"] = float(total)
    return summary


def summary_frame(summary: Dict[str, float]) -> pd.DataFrame:
    return pd.DataFrame(
        {"metric": list(summary.keys()), "value": list(summary.values())}
    )


def low_uncertainty_error(aggregate: pd.DataFrame, quantile: float = 0.25) -> float:
    """Median error over the rows in the lowest ``quantile`` of median uncertainty."""
    cutoff = aggregate["uncertainty_median"].quantile(quantile)
    selected = aggregate.loc[aggregate["uncertainty_median"] <= cutoff]
    return float(selected["abs_error_median"].median())



def error_rises_after_changes(
    aggregate: pd.DataFrame, tolerance: float = 0.0
) -> List[Tuple[int, int, float]]:
    """Rises of the median error while the estimator reacts to each offset change.

    A change is followed from the first step whose median uncertainty drops below
    the median of the stretch before it, up to the next change. Every
    step-to-step rise above ``tolerance`` is returned as ``(change, k, rise)``.
    """
    steps = aggregate["k"].to_numpy(dtype=int)
    truth = aggregate["truth_offset"].to_numpy(dtype=float)
    errors = aggregate["abs_error_median"].to_numpy(dtype=float)
    u = aggregate["uncertainty_median"].to_numpy(dtype=float)
    changes = [int(i) for i in np.flatnonzero(np.diff(truth) != 0.0) + 1]
    bounds = [0] + changes + [len(aggregate)]
    rises: List[Tuple[int, int, float]] = []
    for before, change, stop in zip(bounds[:-2], bounds[1:-1], bounds[2:]):
        below = np.flatnonzero(u[change:stop] < np.median(u[before:change]))
        if not below.size:
            continue
        start = change + int(below[0])
        diffs = np.diff(errors[start:stop])
        for j in np.flatnonzero(diffs > tolerance):
            rise = float(diffs[j])
            rises.append((int(steps[change]), int(steps[start + j + 1]), rise))
    return rises
