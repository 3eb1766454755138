"""Linear Kalman filter with a 2-D nearly-constant-velocity model.

State ordering is ``(x, vx, y, vy)``; positions in metres, velocities in m/s.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Literal, Optional, Sequence

import numpy as np

from ..assessment import StampedMeasurement
from ..errors import ArgumentError, NumericalError, StreamError

logger = logging.getLogger(__name__)

POSITION_SELECTOR = np.array([[1.0, 0.0, 0.0, 0.0], [0.0, 0.0, 1.0, 0.0]])


@dataclass(frozen=True, eq=False)
class GaussianState:
    mean: np.ndarray
    cov: np.ndarray

    def __post_init__(self):
        mean = np.asarray(self.mean, dtype=float)
        cov = np.asarray(self.cov, dtype=float)
        if mean.shape != (4,) or cov.shape != (4, 4):
            raise ArgumentError(
                f"Expected mean (4,) and covariance (4, 4), "
                f"got {mean.shape}, {cov.shape}"
            )
        object.__setattr__(self, "mean", mean)
        object.__setattr__(self, "cov", cov)

    @property
    def position(self) -> np.ndarray:
        return self.mean[[0, 2]]

    @property
    def velocity(self) -> np.ndarray:
        return self.mean[[1, 3]]

    @property
    def speed(self) -> float:
        return float(np.linalg.norm(self.velocity))


@dataclass(frozen=True)
class ProcessModel:
    """White-acceleration noise with per-axis standard deviation ``accel_std``.

    ``discrete`` is the piecewise-constant acceleration model ``Q = ΓσΓᵀ``;
    ``continuous`` integrates white acceleration over ``dt`` and composes
    additively across consecutive predictions.
    """

    accel_std: Sequence[float] = (0.0, 0.0)
    kind: Literal["discrete", "continuous"] = "discrete"

    def __post_init__(self):
        if len(self.accel_std) != 2 or min(self.accel_std) < 0.0:
            raise ArgumentError(
                f"accel_std must be two non-negative values: {self.accel_std}"
            )

    @classmethod
    def from_position_noise(cls, position_std: float, dt: float) -> "ProcessModel":
        """Accelerations giving a position std of ``position_std`` over ``dt``."""
        if dt <= 0.0:
            raise ArgumentError(f"dt must be positive, got {dt}")
        sigma = 2.0 * position_std / dt**2
        return cls((sigma, sigma))

    def transition(self, dt: float) -> np.ndarray:
        return np.kron(np.eye(2), np.array([[1.0, dt], [0.0, 1.0]]))

    def noise(self, dt: float) -> np.ndarray:
        variances = np.square(np.asarray(self.accel_std, dtype=float))
        if self.kind == "continuous":
            block = np.array([[dt**3 / 3.0, dt**2 / 2.0], [dt**2 / 2.0, dt]])
            return np.kron(np.diag(variances), block)
        gamma = np.kron(np.eye(2), np.array([[dt**2 / 2.0], [dt]]))
        return gamma @ np.diag(variances) @ gamma.T


@dataclass(frozen=True, eq=False)
class MeasurementModel:
    h: np.ndarray = field(default_factory=lambda: POSITION_SELECTOR.copy())
    r: np.ndarray = field(default_factory=lambda: np.eye(2))

    def __post_init__(self):
        r = np.asarray(self.r, dtype=float)
        if not np.allclose(r, r.T) or np.any(np.linalg.eigvalsh(r) <= 0.0):
            raise ArgumentError(
                "Measurement covariance must be symmetric positive definite"
            )
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "h", np.asarray(self.h, dtype=float))

    @classmethod
    def position(cls, sigma_r: float) -> "MeasurementModel":
        """Isotropic position measurement with standard deviation ``sigma_r``."""
        return cls(POSITION_SELECTOR.copy(), np.eye(2) * sigma_r**2)


def predict(state: GaussianState, dt: float, pm: ProcessModel) -> GaussianState:
    if dt < 0.0:
        raise ArgumentError(f"Cannot predict backwards in time (dt={dt})")
    if dt == 0.0:
        return state
    f = pm.transition(dt)
    cov = f @ state.cov @ f.T + pm.noise(dt)
    return GaussianState(f @ state.mean, 0.5 * (cov + cov.T))


def update(state: GaussianState, z: np.ndarray, mm: MeasurementModel) -> GaussianState:
    """Measurement update with the Joseph-form covariance."""
    h = mm.h
    innovation_cov = h @ state.cov @ h.T + mm.r
    try:
        gain = np.linalg.solve(innovation_cov, h @ state.cov).T
    except np.linalg.LinAlgError as e:
        raise NumericalError(f"Singular innovation covariance: {e}")
    mean = state.mean + gain @ (np.asarray(z, dtype=float) - h @ state.mean)
    joseph = np.eye(4) - gain @ h
    cov = joseph @ state.cov @ joseph.T + gain @ mm.r @ gain.T
    return GaussianState(mean, 0.5 * (cov + cov.T))


def initial_state(
    first: StampedMeasurement, sigma_r: float, velocity_std: float
) -> GaussianState:
    """Position from the first measurement, zero velocity with a wide prior."""
    mean = np.array([first.position[0], 0.0, first.position[1], 0.0])
    cov = np.diag([sigma_r**2, velocity_std**2, sigma_r**2, velocity_std**2])
    return GaussianState(mean, cov)


@dataclass(frozen=True)
class TrackPoint:
    index: int
    timestamp: float  # coarse steps
    state: GaussianState

    def to_row(self) -> Dict[str, float]:
        x, vx, y, vy = self.state.mean
        return {
            "index": self.index,
            "stamp": self.timestamp,
            "x": x,
            "vx": vx,
            "y": y,
            "vy": vy,
            "speed": self.state.speed,
            "trace": float(np.trace(self.state.cov)),
        }


def run_tracker(
    measurements: Sequence[StampedMeasurement],
    init: GaussianState,
    pm: ProcessModel,
    mm: MeasurementModel,
    step_duration: float = 1.0,
    init_time: Optional[float] = None,
) -> List[TrackPoint]:
    """Filter time-ordered measurements, emitting the posterior after each one.

    Stamps are in coarse steps and converted to seconds with ``step_duration``.
    """
    if not measurements:
        return []
    current = measurements[0].timestamp if init_time is None else init_time
    state = init
    points: List[TrackPoint] = []
    for index, m in enumerate(measurements):
        if m.timestamp < current:
            raise StreamError(
                f"Measurement {index} at {m.timestamp} precedes filter time {current}"
            )
        state = predict(state, (m.timestamp - current) * step_duration, pm)
        state = update(state, m.position, mm)
        current = m.timestamp
        points.append(TrackPoint(index, m.timestamp, state))
    return points


def velocity_rmse(
    points: Sequence[TrackPoint],
    true_velocity: Sequence[float],
    start_index: int = 0,
    stop_index: Optional[int] = None,
) -> float:
    """RMS of the velocity error vector over ``points[start_index:stop_index]``."""
    selected = points[start_index:stop_index]
    if not selected:
        raise ArgumentError("No track points in the requested range")
    errors = np.array([p.state.velocity for p in selected]) - np.asarray(true_velocity)
    return float(np.sqrt(np.mean(np.sum(errors**2, axis=1))))
