"""Windowing, interpolation and similarity measures."""

from .similarity import (
    ShiftScore,
    cross_correlation,
    eta,
    extended_similarity,
    shift_range,
    similarity_scores,
    tau_weight,
    tau_weights,
    theta,
)
from .windows import InterpolatedWindow, MagnitudeWindow, interpolate

__all__ = [
    "MagnitudeWindow",
    "InterpolatedWindow",
    "ShiftScore",
    "interpolate",
    "cross_correlation",
    "theta",
    "eta",
    "tau_weight",
    "tau_weights",
    "shift_range",
    "similarity_scores",
    "extended_similarity",
]
