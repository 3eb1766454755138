"""Vectorized sequences of rigid motions."""

from dataclasses import dataclass
from typing import Iterable, List, Union

import numpy as np
from scipy.spatial.transform import Rotation

from ..errors import ArgumentError
from . import quaternion as quat
from .motion import RigidMotion, inverse


@dataclass(frozen=True, eq=False)
class MotionSeries:
    """``n`` rigid motions as ``(n, 4)`` quaternions and ``(n, 3)`` translations."""

    quaternions: np.ndarray
    translations: np.ndarray

    def __post_init__(self):
        q = np.asarray(self.quaternions, dtype=float).reshape(-1, 4)
        t = np.asarray(self.translations, dtype=float).reshape(-1, 3)
        if len(q) != len(t):
            raise ArgumentError(
                f"Quaternion and translation counts differ: {len(q)} != {len(t)}"
            )
        object.__setattr__(self, "quaternions", quat.normalize(q) if len(q) else q)
        object.__setattr__(self, "translations", t)

    @classmethod
    def identity(cls, count: int) -> "MotionSeries":
        return cls(np.tile(quat.IDENTITY_QUATERNION, (count, 1)), np.zeros((count, 3)))

    @classmethod
    def from_motions(cls, motions: Iterable[RigidMotion]) -> "MotionSeries":
        motions = list(motions)
        if not motions:
            return cls(np.zeros((0, 4)), np.zeros((0, 3)))
        return cls(
            np.stack([m.rotation for m in motions]),
            np.stack([m.translation for m in motions]),
        )

    def to_motions(self) -> List[RigidMotion]:
        return [RigidMotion(q, t) for q, t in zip(self.quaternions, self.translations)]

    def __len__(self) -> int:
        return len(self.quaternions)

    def __getitem__(self, index: Union[int, slice, np.ndarray]):
        if isinstance(index, (int, np.integer)):
            return RigidMotion(self.quaternions[index], self.translations[index])
        return MotionSeries(self.quaternions[index], self.translations[index])

    def rotations(self) -> Rotation:
        return quat.to_rotation(self.quaternions)

    def magnitudes(self) -> np.ndarray:
        """Rotation magnitude of every motion, in radians."""
        if not len(self):
            return np.zeros(0)
        return self.rotations().magnitude()

    def translation_norms(self) -> np.ndarray:
        return np.linalg.norm(self.translations, axis=1)

    def compose(self, other: "MotionSeries") -> "MotionSeries":
        """Element-wise ``self[i]∘other[i]``."""
        if len(self) != len(other):
            raise ArgumentError(f"Length mismatch: {len(self)} != {len(other)}")
        rotations = self.rotations()
        q = quat.from_rotation(rotations * other.rotations())
        t = rotations.apply(other.translations) + self.translations
        return MotionSeries(q, t)

    def conjugate_by(self, transform: RigidMotion) -> "MotionSeries":
        """Element-wise ``transform∘self[i]∘transform⁻¹``."""
        inv = inverse(transform)
        rotations = self.rotations()
        outer = transform.as_rotation()
        q = outer * rotations * inv.as_rotation()
        t = rotations.apply(inv.translation) + self.translations
        t_out = outer.apply(t) + transform.translation
        return MotionSeries(quat.from_rotation(q), t_out)

    def batch(self, factor: int) -> "MotionSeries":
        """Compose each run of ``factor`` consecutive motions, in temporal order.

        Motions are body-frame increments, so a batch is ``m0∘m1∘...∘m(f-1)``.
        """
        if factor < 1:
            raise ArgumentError(f"Batch factor must be positive, got {factor}")
        if len(self) % factor != 0:
            raise ArgumentError(
                f"Series length {len(self)} is not divisible by {factor}"
            )
        count = len(self) // factor
        q_groups = self.quaternions.reshape(count, factor, 4)
        t_groups = self.translations.reshape(count, factor, 3)
        r_acc = quat.to_rotation(q_groups[:, 0])
        t_acc = t_groups[:, 0].copy()
        for j in range(1, factor):
            t_acc = r_acc.apply(t_groups[:, j]) + t_acc
            r_acc = r_acc * quat.to_rotation(q_groups[:, j])
        return MotionSeries(quat.from_rotation(r_acc), t_acc)

    def take(self, indices: np.ndarray) -> "MotionSeries":
        return MotionSeries(self.quaternions[indices], self.translations[indices])
