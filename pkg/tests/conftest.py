"""Shared fixtures."""

import numpy as np
import pytest

from rotsync.config.models import (
    EstimatorConfig,
    ErrorProfile,
    ExperimentConfig,
    SimConfig,
)


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


@pytest.fixture
def small_sim():
    """A short, coarse simulation that still turns enough to estimate on."""
    return SimConfig(coarse_steps=120, fine_factor=10, noise_level=0.0, rng_seed=3)


@pytest.fixture
def small_estimator():
    return EstimatorConfig(window_size=20, interpolation_factor=4)


@pytest.fixture
def small_experiment(small_sim, small_estimator):
    def build(**updates):
        fields = {
            "sim": small_sim,
            "estimator": small_estimator,
            "profile": ErrorProfile(),
            "runs": 2,
            "plots": False,
        }
        fields.update(updates)
        return ExperimentConfig(**fields)

    return build


@pytest.fixture
def peaked_series():
    """Magnitude-like series with one triangular peak on a small slope."""

    def build(length: int, peak: float, width: float = 3.0) -> np.ndarray:
        k = np.arange(length, dtype=float)
        return 0.05 + 0.001 * k + np.clip(1.0 - np.abs(k - peak) / width, 0.0, None)

    return build
