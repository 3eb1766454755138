"""Sliding-window time offset estimation and its uncertainty measure.

Sign convention: a positive offset means sensor 2's magnitude series lags
sensor 1, i.e. ``r2[k] ≈ r1[k - offset]``.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from ..config.models import EstimatorConfig
from ..errors import ArgumentError
from ..signal import (
    MagnitudeWindow,
    ShiftScore,
    cross_correlation,
    interpolate,
    similarity_scores,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OffsetEstimate:
    """Offset in coarse steps (resolution ``1/b``) anchored at step ``timestamp``."""

    timestamp: int
    offset: float
    uncertainty: float
    score_curve: Optional[List[ShiftScore]] = None

    def saturated(self, eps: float) -> bool:
        """True when the windows carried no rotational change at all."""
        return self.uncertainty >= 1.0 / eps


def uncertainty(win1: MagnitudeWindow, win2: MagnitudeWindow, eps: float) -> float:
    """Reciprocal of the total rotational variation of both windows."""
    if win1.size != win2.size or win1.size < 2:
        raise ArgumentError(
            f"Uncertainty needs two windows of equal size >= 2, "
            f"got {win1.size} and {win2.size}"
        )
    activity = win1.total_variation() + win2.total_variation()
    return 1.0 / max(eps, activity)


def pick_shift(shifts: np.ndarray, scores: np.ndarray) -> int:
    """Index of the minimal score; ties go to the smallest |s|, then negative s."""
    order = np.lexsort((shifts > 0, np.abs(shifts)))
    return int(order[np.argmin(scores[order])])


def estimate_offset(
    win1: MagnitudeWindow, win2: MagnitudeWindow, cfg: EstimatorConfig
) -> OffsetEstimate:
    """Estimate the offset of sensor 2 against sensor 1 on a pair of full windows."""
    w = cfg.window_size
    if win1.size != w or win2.size != w:
        raise ArgumentError(
            f"Windows must hold exactly {w} samples, got {win1.size} and {win2.size}"
        )
    if win1.anchor != win2.anchor:
        raise ArgumentError(f"Window anchors differ: {win1.anchor} != {win2.anchor}")

    b = cfg.interpolation_factor
    r1 = interpolate(win1, b)
    r2 = interpolate(win2, b)
    shifts, scores = similarity_scores(
        r1.samples, r2.samples, cfg.temporal_factor, cfg.tau_variant
    )
    best = pick_shift(shifts, scores)
    u = uncertainty(win1, win2, cfg.uncertainty_epsilon)

    curve = None
    if cfg.keep_score_curve:
        curve = [ShiftScore(int(s), float(v)) for s, v in zip(shifts, scores)]

    return OffsetEstimate(
        timestamp=win1.anchor,
        offset=float(shifts[best]) / b,
        uncertainty=u,
        score_curve=curve,
    )


def constant_offset_baseline(r1: np.ndarray, r2: np.ndarray) -> float:
    """Single offset for whole series from the periodic cross-correlation peak.

    The lag is mapped to ``[-N/2, N/2)`` and follows the module sign convention.
    """
    r1 = np.asarray(r1, dtype=float)
    r2 = np.asarray(r2, dtype=float)
    if r1.shape != r2.shape:
        raise ArgumentError(f"Series lengths differ: {r1.shape} != {r2.shape}")
    n = len(r1)
    phi = cross_correlation(r1 - r1.mean(), r2 - r2.mean())
    lag = int(np.argmax(phi))
    if lag >= n / 2:
        lag -= n
    return float(lag)
