"""Timestamp correction strategies.

Sensor 1 is the reference clock. Sensor 2 stamps are moved onto it by
subtracting the estimated offset.
"""

import bisect
import logging
from collections import Counter
from dataclasses import dataclass, replace
from enum import Enum
from typing import List, Optional

import numpy as np

from ..config.models import CorrectionStrategy
from ..errors import ArgumentError, ConfigurationError, StreamError
from ..estimator import OffsetEstimate

logger = logging.getLogger(__name__)

REFERENCE_SENSOR = 1


@dataclass(frozen=True, eq=False)
class StampedMeasurement:
    """A 2-D position measurement stamped in coarse steps."""

    sensor_id: int
    timestamp: float
    position: np.ndarray  # metres
    noise_std: float

    def __post_init__(self):
        position = np.asarray(self.position, dtype=float)
        if position.shape != (2,) or not np.all(np.isfinite(position)):
            raise ArgumentError(
                f"Measurement payload must be a finite 2-vector: {position}"
            )
        object.__setattr__(self, "position", position)


class CorrectionOutcome(Enum):
    CORRECTED = "corrected"
    DISCARDED = "discarded"
    UNCHANGED = "unchanged"


@dataclass(frozen=True)
class CorrectionResult:
    outcome: CorrectionOutcome
    measurement: Optional[StampedMeasurement]


def _unchanged(m: StampedMeasurement) -> CorrectionResult:
    return CorrectionResult(CorrectionOutcome.UNCHANGED, m)


def correct(
    m: StampedMeasurement, est: OffsetEstimate, strategy: CorrectionStrategy
) -> CorrectionResult:
    """Apply ``strategy`` to one measurement given the estimate in force.

    The uncertainty gate is checked before the zero-offset shortcut, so a gated
    strategy discards measurements under unassessable estimates even when the
    estimated offset is zero.
    """
    if m.sensor_id == REFERENCE_SENSOR:
        return _unchanged(m)

    if strategy.kind == "always_apply":
        apply = True
    else:
        if strategy.u_max is None:
            raise ConfigurationError(
                f"Strategy '{strategy.kind}' needs u_max; calibrate it first"
            )
        certain = est.uncertainty <= strategy.u_max
        if strategy.kind == "uncertainty_gate":
            if not certain:
                return CorrectionResult(CorrectionOutcome.DISCARDED, None)
            apply = True
        else:
            apply = certain or abs(est.offset) >= strategy.offset_min

    if not apply or est.offset == 0.0:
        return _unchanged(m)
    return CorrectionResult(
        CorrectionOutcome.CORRECTED, replace(m, timestamp=m.timestamp - est.offset)
    )


class CorrectionSession:
    """Pairs each measurement with the latest estimate at or before its stamp."""

    def __init__(self, strategy: CorrectionStrategy):
        self.strategy = strategy
        self._stamps: List[int] = []
        self._estimates: List[OffsetEstimate] = []
        self.counts: Counter = Counter()

    def add_estimate(self, est: OffsetEstimate) -> None:
        if self._stamps and est.timestamp <= self._stamps[-1]:
            raise StreamError(
                f"Estimate at {est.timestamp} does not follow {self._stamps[-1]}"
            )
        self._stamps.append(est.timestamp)
        self._estimates.append(est)

    def estimate_at(self, timestamp: float) -> Optional[OffsetEstimate]:
        index = bisect.bisect_right(self._stamps, timestamp) - 1
        return self._estimates[index] if index >= 0 else None

    def apply(self, m: StampedMeasurement) -> CorrectionResult:
        est = self.estimate_at(m.timestamp)
        if est is None:
            # nothing estimated yet: pass through
            result = _unchanged(m)
        else:
            result = correct(m, est, self.strategy)
        self.counts[result.outcome] += 1
        return result

    def apply_all(
        self, measurements: List[StampedMeasurement]
    ) -> List[StampedMeasurement]:
        """Corrected stream with discarded measurements dropped."""
        kept = []
        for m in measurements:
            result = self.apply(m)
            if result.measurement is not None:
                kept.append(result.measurement)
        logger.debug(
            "Correction outcomes: "
            + ", ".join(f"{o.value}={self.counts[o]}" for o in CorrectionOutcome)
        )
        return kept
