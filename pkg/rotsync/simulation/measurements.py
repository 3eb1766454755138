"""Target position measurements of both sensors."""

from typing import List, Tuple

import numpy as np

from ..assessment import StampedMeasurement
from .paths import PoseSequence


def simulate_measurements(
    target: PoseSequence,
    offsets: np.ndarray,
    sigma_r: float,
    rng: np.random.Generator,
) -> Tuple[List[StampedMeasurement], List[StampedMeasurement]]:
    """One global-frame target measurement per coarse step and sensor.

    Sensor 2 acquires at ``k - offset[k]`` but stamps ``k``, so a lagging sensor
    reports where the target was earlier.
    """
    positions = target.positions()
    per_sensor = []
    for sensor_id, lag in ((1, np.zeros_like(offsets)), (2, offsets)):
        stamps = np.arange(len(offsets), dtype=float)
        index = [target.index_of_step(k - d) for k, d in zip(stamps, lag)]
        truth = positions[index]
        noisy = truth + rng.normal(0.0, sigma_r, size=truth.shape)
        per_sensor.append(
            [
                StampedMeasurement(sensor_id, float(k), p, sigma_r)
                for k, p in zip(stamps, noisy)
            ]
        )
    return per_sensor[0], per_sensor[1]
