"""Time offset estimation between two rigidly mounted sensors."""

from .batch import estimate_series
from .offset import (
    OffsetEstimate,
    constant_offset_baseline,
    estimate_offset,
    pick_shift,
    uncertainty,
)
from .online import OnlineEstimator

__all__ = [
    "OffsetEstimate",
    "OnlineEstimator",
    "estimate_offset",
    "estimate_series",
    "uncertainty",
    "pick_shift",
    "constant_offset_baseline",
]
