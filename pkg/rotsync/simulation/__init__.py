"""Simulation of rigidly mounted sensors, error profiles and measurements."""

from .io import SIMRUN_FILES, read_simrun, write_csv, write_simrun
from .measurements import simulate_measurements
from .motions import (
    add_noise,
    batch_to_coarse,
    derive_noisy_motions,
    noise_sigmas,
    relative_motions,
)
from .paths import PoseSequence, generate_paths, lissajous_point
from .profiles import apply_error_profile, offset_series
from .run import SimRun, simulate_run

__all__ = [
    "PoseSequence",
    "SimRun",
    "SIMRUN_FILES",
    "generate_paths",
    "lissajous_point",
    "relative_motions",
    "noise_sigmas",
    "add_noise",
    "derive_noisy_motions",
    "apply_error_profile",
    "offset_series",
    "batch_to_coarse",
    "simulate_measurements",
    "simulate_run",
    "write_csv",
    "write_simrun",
    "read_simrun",
]
