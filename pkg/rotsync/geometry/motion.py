"""Rigid motions and the transformation-cycle check."""

from dataclasses import dataclass, field
from typing import NewType, Optional, Sequence

import numpy as np
from scipy.spatial.transform import Rotation

from ..errors import ArgumentError
from . import quaternion as quat

RotationMagnitude = NewType("RotationMagnitude", float)


@dataclass(frozen=True, eq=False)
class RigidMotion:
    """A 6-DoF transform: unit-quaternion rotation plus translation in metres.

    The quaternion is renormalized and canonicalized to ``w >= 0`` on
    construction, so ``q`` and ``-q`` produce the same value.
    """

    rotation: np.ndarray = field(default_factory=lambda: quat.IDENTITY_QUATERNION)
    translation: np.ndarray = field(default_factory=lambda: np.zeros(3))

    def __post_init__(self):
        rotation = np.asarray(self.rotation, dtype=float)
        translation = np.asarray(self.translation, dtype=float)
        if rotation.shape != (4,) or translation.shape != (3,):
            raise ArgumentError(
                f"Expected rotation (4,) and translation (3,), got "
                f"{rotation.shape} and {translation.shape}"
            )
        rotation = quat.normalize(rotation)
        rotation.setflags(write=False)
        translation = translation.copy()
        translation.setflags(write=False)
        object.__setattr__(self, "rotation", rotation)
        object.__setattr__(self, "translation", translation)

    @classmethod
    def identity(cls) -> "RigidMotion":
        return cls()

    @classmethod
    def from_axis_angle(
        cls,
        axis: Sequence[float],
        angle: float,
        translation: Optional[Sequence[float]] = None,
    ) -> "RigidMotion":
        """Build a motion rotating ``angle`` radians about ``axis``."""
        rotation = quat.from_axis_angle(np.asarray(axis, dtype=float), angle)
        if translation is None:
            translation = np.zeros(3)
        return cls(rotation, np.asarray(translation, dtype=float))

    @classmethod
    def random(
        cls, rng: np.random.Generator, translation_scale: float = 1.0
    ) -> "RigidMotion":
        """Uniformly distributed rotation with Gaussian translation."""
        return cls(rng.normal(size=4), rng.normal(scale=translation_scale, size=3))

    def as_rotation(self) -> Rotation:
        return quat.to_rotation(self.rotation)

    def is_close(self, other: "RigidMotion", atol: float = 1e-9) -> bool:
        return bool(
            np.allclose(self.rotation, other.rotation, rtol=0.0, atol=atol)
            and np.allclose(self.translation, other.translation, rtol=0.0, atol=atol)
        )

    def __repr__(self) -> str:
        q = np.array2string(self.rotation, precision=6)
        t = np.array2string(self.translation, precision=6)
        return f"RigidMotion(rotation={q}, translation={t})"


def compose(a: RigidMotion, b: RigidMotion) -> RigidMotion:
    """Return ``a∘b``: apply ``b`` first, then ``a``."""
    ra = a.as_rotation()
    rotation = quat.from_rotation(ra * b.as_rotation())
    return RigidMotion(rotation, ra.apply(b.translation) + a.translation)


def inverse(m: RigidMotion) -> RigidMotion:
    rotation = m.as_rotation().inv()
    return RigidMotion(quat.from_rotation(rotation), -rotation.apply(m.translation))


def rotation_magnitude(m: RigidMotion) -> RotationMagnitude:
    """Angle of the rotation part, in ``[0, π]``; translation is ignored."""
    return RotationMagnitude(float(m.as_rotation().magnitude()))


def cycle_residual(t: RigidMotion, va: RigidMotion, vb: RigidMotion) -> RigidMotion:
    """Compose the cycle ``t∘va∘t⁻¹∘vb⁻¹``.

    ``t`` maps sensor-a coordinates into sensor-b coordinates. For synchronized,
    noise-free motions ``vb = t∘va∘t⁻¹`` and the residual is the identity.
    """
    return compose(compose(compose(t, va), inverse(t)), inverse(vb))
