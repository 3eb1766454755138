"""Ground-truth offset trajectories and their realization on the fine grid."""

from typing import Tuple

import numpy as np

from ..config.models import ErrorProfile
from ..errors import SimulationError
from ..geometry import MotionSeries


def offset_series(
    profile: ErrorProfile, coarse_steps: int, fine_factor: int
) -> np.ndarray:
    """Offset of sensor 2 at every coarse step, on the ``1/fine_factor`` grid.

    Ramp values are rounded to the fine grid; step offsets must already lie on
    it.
    """
    k = np.arange(coarse_steps, dtype=float)
    if profile.kind == "none":
        return np.zeros(coarse_steps)

    if profile.kind == "ramp":
        span = profile.end_step - profile.start_step
        fraction = np.clip((k - profile.start_step) / span, 0.0, 1.0)
        return np.round(profile.final_offset * fraction * fine_factor) / fine_factor

    offsets = np.zeros(coarse_steps)
    for step, offset in profile.steps:
        scaled = offset * fine_factor
        if abs(scaled - round(scaled)) > 1e-9:
            raise SimulationError(
                f"Offset {offset} is not representable with fine factor {fine_factor}"
            )
        offsets[k >= step] = round(scaled) / fine_factor
    return offsets


def apply_error_profile(
    fine: MotionSeries,
    profile: ErrorProfile,
    fine_factor: int,
    coarse_steps: int,
    margin: int,
) -> Tuple[MotionSeries, np.ndarray]:
    """Resample sensor 2's fine motions so that it lags by the profile's offset.

    ``fine`` covers the run plus ``margin`` fine samples on either side. At coarse
    step ``k`` sensor 2 reads fine index ``k·f - offset(k)·f``. Returns the
    ``coarse_steps·f`` shifted motions and the ground-truth offset per coarse step.
    """
    offsets = offset_series(profile, coarse_steps, fine_factor)
    shift = np.round(offsets * fine_factor).astype(int)
    j = np.arange(coarse_steps * fine_factor)
    source = margin + j - np.repeat(shift, fine_factor)
    if source.min() < 0 or source.max() >= len(fine):
        raise SimulationError(
            f"Offsets up to {np.abs(offsets).max()} steps read outside the simulated "
            f"range; increase the simulation margin"
        )
    return fine.take(source), offsets
