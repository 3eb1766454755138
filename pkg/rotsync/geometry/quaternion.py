"""Scalar-first unit quaternions on top of scipy's ``Rotation``.

Quaternions are stored as ``(w, x, y, z)`` with ``w >= 0``, either a single ``(4,)``
array or a batch of shape ``(n, 4)``. scipy keeps the scalar part last, so every
crossing reorders the components.
"""

import numpy as np
from scipy.spatial.transform import Rotation

from ..errors import ArgumentError

IDENTITY_QUATERNION = np.array([1.0, 0.0, 0.0, 0.0])


def to_rotation(q: np.ndarray) -> Rotation:
    q = np.asarray(q, dtype=float)
    if np.any(np.linalg.norm(q, axis=-1) == 0.0):
        raise ArgumentError("Zero quaternion cannot be normalized")
    return Rotation.from_quat(np.roll(q, -1, axis=-1))


def from_rotation(rotation: Rotation) -> np.ndarray:
    """Scalar-first components of ``rotation``, canonicalized to ``w >= 0``."""
    q = np.roll(rotation.as_quat(), 1, axis=-1)
    return q * np.where(q[..., :1] < 0.0, -1.0, 1.0)


def normalize(q: np.ndarray) -> np.ndarray:
    """Scale to unit norm and canonicalize to a non-negative scalar part."""
    return from_rotation(to_rotation(q))


def multiply(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Hamilton product ``p ⊗ q``: rotate by ``q`` first, then by ``p``."""
    return from_rotation(to_rotation(p) * to_rotation(q))


def rotate(q: np.ndarray, v: np.ndarray) -> np.ndarray:
    return to_rotation(q).apply(v)


def angle(q: np.ndarray) -> np.ndarray:
    """Rotation angle in ``[0, π]``."""
    return to_rotation(q).magnitude()


def from_axis_angle(axis: np.ndarray, theta: np.ndarray) -> np.ndarray:
    """Quaternion(s) for rotation(s) of ``theta`` about ``axis``.

    ``axis`` need not be normalized and negative angles are allowed.
    """
    axis = np.asarray(axis, dtype=float)
    axis = axis / np.linalg.norm(axis, axis=-1, keepdims=True)
    rotvec = axis * np.asarray(theta, dtype=float)[..., None]
    return from_rotation(Rotation.from_rotvec(rotvec))


def random_small_rotations(
    rng: np.random.Generator, count: int, sigma: float
) -> np.ndarray:
    """Rotations with axis uniform on the sphere and angle drawn from N(0, sigma)."""
    axes = rng.normal(size=(count, 3))
    angles = rng.normal(0.0, sigma, size=count)
    return from_axis_angle(axes, angles)
