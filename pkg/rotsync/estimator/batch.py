"""Estimation over complete magnitude series."""

import logging
import time
from typing import List, Optional

import numpy as np

from ..config.models import EstimatorConfig
from ..errors import ArgumentError
from ..signal import MagnitudeWindow
from .offset import OffsetEstimate, estimate_offset

logger = logging.getLogger(__name__)


def estimate_series(
    r1: np.ndarray,
    r2: np.ndarray,
    cfg: EstimatorConfig,
    durations: Optional[List[float]] = None,
) -> List[OffsetEstimate]:
    """One estimate per step from window fill onward.

    When ``cfg.feedback`` is set, sensor 2's magnitudes are resampled on the
    corrected time axis (shifted by the previous estimate) before windowing, and
    each reported offset is the held offset plus the residual found on the
    corrected windows. Wall time of every ``estimate_offset`` call is appended to
    ``durations`` when given.
    """
    r1 = np.asarray(r1, dtype=float)
    r2 = np.asarray(r2, dtype=float)
    if r1.shape != r2.shape:
        raise ArgumentError(f"Series lengths differ: {r1.shape} != {r2.shape}")
    w = cfg.window_size
    if len(r1) < w:
        logger.warning(f"Series of {len(r1)} steps never fills a window of {w}")
        return []

    estimates: List[OffsetEstimate] = []
    held = 0.0
    reach = w / 2
    for k in range(w - 1, len(r1)):
        win1 = MagnitudeWindow.from_series(r1, k, w)
        if cfg.feedback:
            steps = np.arange(k - w + 1, k + 1) + held
            # only samples up to k are known; later positions clamp to r2[k]
            samples = np.interp(steps, np.arange(k + 1, dtype=float), r2[: k + 1])
            win2 = MagnitudeWindow(samples, k)
        else:
            win2 = MagnitudeWindow.from_series(r2, k, w)

        start = time.perf_counter()
        estimate = estimate_offset(win1, win2, cfg)
        if durations is not None:
            durations.append(time.perf_counter() - start)

        if cfg.feedback:
            held = float(np.clip(held + estimate.offset, -reach, reach))
            estimate = OffsetEstimate(
                timestamp=estimate.timestamp,
                offset=held,
                uncertainty=estimate.uncertainty,
                score_curve=estimate.score_curve,
            )
        estimates.append(estimate)

    logger.debug(f"Estimated {len(estimates)} offsets over {len(r1)} steps")
    return estimates
