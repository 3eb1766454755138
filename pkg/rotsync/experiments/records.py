"""Tabular views of estimates, verdicts and trajectories."""

from typing import List, Sequence

import numpy as np
import pandas as pd

from ..assessment import SyncVerdict
from ..estimator import OffsetEstimate
from ..tracking import TrackPoint

ESTIMATE_COLUMNS = ["k", "offset", "uncertainty", "truth_offset", "abs_error"]


def estimates_frame(
    estimates: Sequence[OffsetEstimate], truth_offsets: np.ndarray
) -> pd.DataFrame:
    """One row per estimate, joined with the ground-truth offset at its step."""
    steps = np.array([est.timestamp for est in estimates], dtype=int)
    offsets = np.array([est.offset for est in estimates], dtype=float)
    truth = np.asarray(truth_offsets, dtype=float)[steps]
    return pd.DataFrame(
        {
            "k": steps,
            "offset": offsets,
            "uncertainty": [est.uncertainty for est in estimates],
            "truth_offset": truth,
            "abs_error": np.abs(offsets - truth),
        },
        columns=ESTIMATE_COLUMNS,
    )


def frame_to_estimates(frame: pd.DataFrame) -> List[OffsetEstimate]:
    """Inverse of :func:`estimates_frame` for the estimate columns."""
    return [
        OffsetEstimate(int(k), float(offset), float(u))
        for k, offset, u in frame[["k", "offset", "uncertainty"]].itertuples(
            index=False
        )
    ]


def verdicts_frame(verdicts: Sequence[SyncVerdict]) -> pd.DataFrame:
    return pd.DataFrame(
        [v.to_row() for v in verdicts], columns=["k", "state", "offset", "uncertainty"]
    )


def trajectory_frame(points: Sequence[TrackPoint]) -> pd.DataFrame:
    columns = ["index", "stamp", "x", "vx", "y", "vy", "speed", "trace"]
    return pd.DataFrame([p.to_row() for p in points], columns=columns)
