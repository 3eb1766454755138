"""Kalman tracking used to measure the impact of timestamp offsets."""

from .kalman import (
    GaussianState,
    MeasurementModel,
    ProcessModel,
    TrackPoint,
    initial_state,
    predict,
    run_tracker,
    update,
    velocity_rmse,
)

__all__ = [
    "GaussianState",
    "MeasurementModel",
    "ProcessModel",
    "TrackPoint",
    "initial_state",
    "predict",
    "update",
    "run_tracker",
    "velocity_rmse",
]
