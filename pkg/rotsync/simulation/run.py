"""Assembly of a complete simulation run."""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from ..assessment import StampedMeasurement
from ..config.models import ErrorProfile, SimConfig
from ..geometry import MotionSeries, RigidMotion
from .measurements import simulate_measurements
from .motions import batch_to_coarse, derive_noisy_motions
from .paths import generate_paths
from .profiles import apply_error_profile

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SimRun:
    """Coarse motions, ground truth and measurements of one simulated run."""

    motions1: MotionSeries
    motions2: MotionSeries
    truth_offsets: np.ndarray  # coarse steps, per coarse step
    measurements1: List[StampedMeasurement]
    measurements2: List[StampedMeasurement]
    target_truth: np.ndarray  # (coarse_steps, 2) target position at step k
    mount: Optional[RigidMotion] = None
    fine_steps: int = 0

    @property
    def coarse_steps(self) -> int:
        return len(self.truth_offsets)

    def magnitudes(self) -> Tuple[np.ndarray, np.ndarray]:
        """Rotation-magnitude series of both sensors."""
        return self.motions1.magnitudes(), self.motions2.magnitudes()


def simulate_run(
    sim: SimConfig,
    profile: ErrorProfile,
    measurement_noise: float,
    seed: Optional[int] = None,
) -> SimRun:
    """Simulate one run; identical inputs produce identical runs."""
    seed = sim.rng_seed if seed is None else seed
    motion_seed, measurement_seed = np.random.SeedSequence(seed).spawn(2)

    ego, target = generate_paths(sim)
    fine1, fine2, mount = derive_noisy_motions(
        ego,
        sim.noise_level,
        motion_seed,
        mount_translation_scale=sim.mount_translation_scale,
    )

    f = sim.fine_factor
    margin = sim.margin_steps * f
    run_span = slice(margin, margin + sim.coarse_steps * f)
    shifted2, offsets = apply_error_profile(
        fine2, profile, f, sim.coarse_steps, margin
    )
    coarse1 = batch_to_coarse(fine1[run_span], f)
    coarse2 = batch_to_coarse(shifted2, f)

    measurements1, measurements2 = simulate_measurements(
        target, offsets, measurement_noise, np.random.default_rng(measurement_seed)
    )
    stamped_index = [target.index_of_step(k) for k in range(sim.coarse_steps)]
    target_truth = target.positions()[stamped_index]

    logger.debug(
        f"Simulated seed {seed}: {sim.coarse_steps} coarse steps from "
        f"{len(fine1)} fine motions, profile '{profile.kind}'"
    )
    return SimRun(
        motions1=coarse1,
        motions2=coarse2,
        truth_offsets=offsets,
        measurements1=measurements1,
        measurements2=measurements2,
        target_truth=target_truth,
        mount=mount,
        fine_steps=sim.coarse_steps * f,
    )
