"""Synchronicity verdicts derived from offset estimates."""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Union

from ..errors import ConfigurationError
from ..estimator import OffsetEstimate


class SyncState(Enum):
    IN_SYNC = "in_sync"
    OFFSET_DETECTED = "offset_detected"
    UNASSESSABLE = "unassessable"


@dataclass(frozen=True)
class SyncVerdict:
    timestamp: int
    state: SyncState
    offset: float  # coarse steps
    uncertainty: float

    def to_row(self) -> Dict[str, Union[int, str, float]]:
        return {
            "k": self.timestamp,
            "state": self.state.value,
            "offset": self.offset,
            "uncertainty": self.uncertainty,
        }


def assess(est: OffsetEstimate, u_max: float, offset_min: float) -> SyncVerdict:
    """Classify one estimate; high uncertainty dominates the offset test."""
    if u_max <= 0.0 or offset_min <= 0.0:
        raise ConfigurationError(
            f"Thresholds must be positive, got u_max={u_max}, offset_min={offset_min}"
        )
    if est.uncertainty > u_max:
        state = SyncState.UNASSESSABLE
    elif abs(est.offset) >= offset_min:
        state = SyncState.OFFSET_DETECTED
    else:
        state = SyncState.IN_SYNC
    return SyncVerdict(est.timestamp, state, est.offset, est.uncertainty)
