"""Rigid-motion representation and rotation-magnitude extraction."""

from .motion import (
    RigidMotion,
    RotationMagnitude,
    compose,
    cycle_residual,
    inverse,
    rotation_magnitude,
)
from .series import MotionSeries

__all__ = [
    "RigidMotion",
    "RotationMagnitude",
    "MotionSeries",
    "compose",
    "inverse",
    "rotation_magnitude",
    "cycle_residual",
]
