"""Threshold calibration from an in-sync warm-up phase."""

import logging
from typing import Optional, Sequence

import numpy as np

from ..config.models import CorrectionStrategy
from ..errors import ArgumentError
from ..estimator import OffsetEstimate

logger = logging.getLogger(__name__)


def calibrate_u_max(uncertainties: Sequence[float], quantile: float = 0.75) -> float:
    """Quantile of the uncertainties observed while the sensors are in sync."""
    values = np.asarray(uncertainties, dtype=float)
    if values.size == 0:
        raise ArgumentError("Cannot calibrate u_max without warm-up estimates")
    return float(np.quantile(values, quantile))


def resolve_strategy(
    strategy: CorrectionStrategy,
    estimates: Sequence[OffsetEstimate],
    eps: Optional[float] = None,
) -> CorrectionStrategy:
    """Fill in ``u_max`` from the first ``warmup_steps`` estimates when unset.

    With ``eps`` given, saturated warm-up estimates are left out of the quantile.
    A warm-up without any rotational change yields ``u_max = 1/(2·eps)`` so that
    saturated estimates stay unassessable.
    """
    if strategy.u_max is not None:
        return strategy
    warmup = list(estimates[: strategy.warmup_steps])
    if eps is not None:
        informative = [est for est in warmup if not est.saturated(eps)]
        if warmup and not informative:
            logger.warning("Warm-up phase carried no rotation; u_max falls back")
            return strategy.with_u_max(0.5 / eps)
        warmup = informative
    uncertainties = [est.uncertainty for est in warmup]
    u_max = calibrate_u_max(uncertainties, strategy.warmup_quantile)
    logger.debug(f"Calibrated u_max={u_max:.6g} from {len(warmup)} warm-up estimates")
    return strategy.with_u_max(u_max)
