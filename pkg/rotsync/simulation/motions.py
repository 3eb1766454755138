"""Per-sensor motion estimates: relative motions, noise and batching."""

import logging
from typing import Optional, Tuple, Union

import numpy as np

from ..errors import ArgumentError
from ..geometry import MotionSeries, RigidMotion
from ..geometry import quaternion as quat
from .paths import PoseSequence

logger = logging.getLogger(__name__)

Seed = Union[int, np.random.SeedSequence, np.random.Generator]


def relative_motions(poses: PoseSequence) -> MotionSeries:
    """Body-frame motion between consecutive planar poses (rotation about z)."""
    if len(poses) < 2:
        raise ArgumentError("At least two poses are needed to derive motions")
    turn = np.diff(poses.heading)
    dx = np.diff(poses.x)
    dy = np.diff(poses.y)
    cos_h = np.cos(poses.heading[:-1])
    sin_h = np.sin(poses.heading[:-1])
    forward = cos_h * dx + sin_h * dy
    lateral = -sin_h * dx + cos_h * dy
    rotations = quat.from_axis_angle(np.array([0.0, 0.0, 1.0]), turn)
    translations = np.column_stack([forward, lateral, np.zeros_like(forward)])
    return MotionSeries(rotations, translations)


def noise_sigmas(motions: MotionSeries, noise_level: float) -> Tuple[float, float]:
    """Rotation and translation noise std relative to the mean step magnitudes."""
    sigma_rot = noise_level * float(np.mean(motions.magnitudes()))
    sigma_trans = noise_level * float(np.mean(motions.translation_norms()))
    return sigma_rot, sigma_trans


def add_noise(
    motions: MotionSeries,
    sigma_rot: float,
    sigma_trans: float,
    rng: np.random.Generator,
) -> MotionSeries:
    """Compose a small random rotation onto every step and jitter its translation."""
    n = len(motions)
    noise_q = quat.random_small_rotations(rng, n, sigma_rot)
    noise_t = rng.normal(0.0, sigma_trans, size=(n, 3))
    return MotionSeries(
        quat.multiply(motions.quaternions, noise_q), motions.translations + noise_t
    )


def derive_noisy_motions(
    poses: PoseSequence,
    noise_level: float,
    seed: Seed,
    mount: Optional[RigidMotion] = None,
    mount_translation_scale: float = 0.5,
) -> Tuple[MotionSeries, MotionSeries, RigidMotion]:
    """Noisy fine-grid motions of both sensors and the mount transform used.

    Sensor 2 sees the conjugate ``mount∘v∘mount⁻¹`` of sensor 1's motion. When no
    mount is given one is drawn from ``seed`` before any noise.
    """
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    if mount is None:
        mount = RigidMotion.random(rng, mount_translation_scale)

    base = relative_motions(poses)
    sensor1 = base
    sensor2 = base.conjugate_by(mount)

    sigma_rot, sigma_trans = noise_sigmas(base, noise_level)
    logger.debug(
        f"Motion noise: sigma_rot={sigma_rot:.3g} rad, sigma_trans={sigma_trans:.3g} m"
    )
    if noise_level > 0.0:
        sensor1 = add_noise(sensor1, sigma_rot, sigma_trans, rng)
        sensor2 = add_noise(sensor2, sigma_rot, sigma_trans, rng)
    return sensor1, sensor2, mount


def batch_to_coarse(fine: MotionSeries, fine_factor: int) -> MotionSeries:
    """Compose each run of ``fine_factor`` fine motions into one coarse motion."""
    return fine.batch(fine_factor)
