"""Ground-truth ego and target paths on the fine simulation grid."""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..config.models import PathConfig, SimConfig


@dataclass(frozen=True, eq=False)
class PoseSequence:
    """Planar poses sampled on the fine grid.

    ``times`` are in coarse steps; index ``margin`` (in fine samples) is coarse
    step 0.
    """

    times: np.ndarray
    x: np.ndarray
    y: np.ndarray
    heading: np.ndarray
    fine_factor: int
    margin: int

    def __len__(self) -> int:
        return len(self.times)

    def positions(self) -> np.ndarray:
        return np.column_stack([self.x, self.y])

    def index_of_step(self, k: float) -> int:
        """Fine index of (possibly fractional, grid-aligned) coarse time ``k``."""
        return self.margin + int(round(k * self.fine_factor))


def lissajous_point(t: np.ndarray, path: PathConfig) -> Tuple[np.ndarray, np.ndarray]:
    """``x = r·sin(a·t)``, ``y = r·sin(a·t)·cos(c·t)``."""
    t = np.asarray(t, dtype=float)
    x = path.radius * np.sin(path.sin_factor * t)
    y = path.radius * np.sin(path.sin_factor * t) * np.cos(path.cos_factor * t)
    return x, y


def _lissajous_heading(t: np.ndarray, path: PathConfig) -> np.ndarray:
    r, a, c = path.radius, path.sin_factor, path.cos_factor
    dx = r * a * np.cos(a * t)
    dy = r * a * np.cos(a * t) * np.cos(c * t) - r * c * np.sin(a * t) * np.sin(c * t)
    return np.unwrap(np.arctan2(dy, dx))


def generate_paths(cfg: SimConfig) -> Tuple[PoseSequence, PoseSequence]:
    """Ego and target poses over the run plus ``margin_steps`` on either side.

    The Lissajous parameter covers ``[0, 2π]`` across the ``coarse_steps`` of the
    run; the target drives along +x at ``target_speed``.
    """
    f = cfg.fine_factor
    margin = cfg.margin_steps * f
    count = (cfg.coarse_steps + 2 * cfg.margin_steps) * f + 1
    times = (np.arange(count) - margin) / f
    seconds = times * cfg.step_duration

    if cfg.path.kind == "lissajous":
        t = 2.0 * np.pi * times / cfg.coarse_steps
        ego_x, ego_y = lissajous_point(t, cfg.path)
        heading = _lissajous_heading(t, cfg.path)
    else:
        ego_x = cfg.path.speed * seconds
        ego_y = np.zeros(count)
        heading = np.zeros(count)
    ego = PoseSequence(times, ego_x, ego_y, heading, f, margin)

    x0, y0 = cfg.target_start
    target = PoseSequence(
        times,
        x0 + cfg.target_speed * seconds,
        np.full(count, float(y0)),
        np.zeros(count),
        f,
        margin,
    )
    return ego, target
