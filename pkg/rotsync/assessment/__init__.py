"""Self-assessment of synchronicity and timestamp correction."""

from .correction import (
    REFERENCE_SENSOR,
    CorrectionOutcome,
    CorrectionResult,
    CorrectionSession,
    StampedMeasurement,
    correct,
)
from .thresholds import calibrate_u_max, resolve_strategy
from .verdict import SyncState, SyncVerdict, assess

__all__ = [
    "REFERENCE_SENSOR",
    "CorrectionOutcome",
    "CorrectionResult",
    "CorrectionSession",
    "StampedMeasurement",
    "SyncState",
    "SyncVerdict",
    "assess",
    "correct",
    "calibrate_u_max",
    "resolve_strategy",
]
