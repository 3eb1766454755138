"""Configuration data models."""

from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, model_validator


class PathConfig(BaseModel):
    kind: Literal["lissajous", "straight"] = "lissajous"
    radius: float = Field(30.0, gt=0.0)  # metres
    sin_factor: float = 2.0
    cos_factor: float = 3.0
    speed: float = Field(0.4, ge=0.0)  # m/s, straight paths only


class SimConfig(BaseModel):
    coarse_steps: int = Field(200, ge=2)
    fine_factor: int = Field(100, ge=1)
    path: PathConfig = Field(default_factory=PathConfig)
    noise_level: float = Field(0.5, ge=0.0)
    rng_seed: int = Field(0, ge=0, lt=2**64)
    step_duration: float = Field(1.0, gt=0.0)  # seconds per coarse step
    margin_steps: int = Field(16, ge=0)  # extra coarse steps simulated on each side
    mount_translation_scale: float = Field(0.5, ge=0.0)  # metres
    target_speed: float = 0.4  # m/s along +x
    target_start: Tuple[float, float] = (-40.0, 0.0)


class ErrorProfile(BaseModel):
    """Ground-truth time offset of sensor 2, in coarse steps."""

    kind: Literal["none", "ramp", "steps"] = "none"
    start_step: int = Field(25, ge=0)
    end_step: int = Field(100, ge=0)
    final_offset: float = 1.0
    steps: List[Tuple[int, float]] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_shape(self) -> "ErrorProfile":
        if self.kind == "ramp" and self.end_step <= self.start_step:
            raise ValueError("ramp end_step must be greater than start_step")
        if self.kind == "steps":
            positions = [step for step, _ in self.steps]
            if positions != sorted(positions) or len(set(positions)) != len(positions):
                raise ValueError("step positions must be strictly increasing")
            if any(step <= 0 for step in positions):
                raise ValueError("the initial offset is zero; steps must start after 0")
        return self

    @classmethod
    def ramp_default(cls, coarse_steps: int = 200) -> "ErrorProfile":
        """Ramp from 0 to one coarse step between the first eighth and the middle.

        The second half holds the final offset, so an estimator window fits inside it.
        """
        return cls(
            kind="ramp",
            start_step=coarse_steps // 8,
            end_step=coarse_steps // 2,
            final_offset=1.0,
        )

    @classmethod
    def steps_default(cls, coarse_steps: int = 200) -> "ErrorProfile":
        """Jump to +2 coarse steps at a quarter of the run and to -2 at five eighths.

        Stretches of constant offset are longer than a default estimator window.
        """
        return cls(
            kind="steps",
            steps=[(coarse_steps // 4, 2.0), (5 * coarse_steps // 8, -2.0)],
        )

    def extreme_offsets(self) -> List[float]:
        if self.kind == "ramp":
            return [0.0, self.final_offset]
        if self.kind == "steps":
            return [0.0] + [offset for _, offset in self.steps]
        return [0.0]


class EstimatorConfig(BaseModel):
    window_size: int = Field(50, ge=4)
    interpolation_factor: int = Field(10, ge=1)
    temporal_factor: float = Field(0.9, gt=0.0, le=1.0)
    uncertainty_epsilon: float = Field(1e-9, gt=0.0)
    tau_variant: Literal["intent", "printed"] = "intent"
    keep_score_curve: bool = False
    # estimate on corrected sensor-2 stamps (experimental)
    feedback: bool = False

    @model_validator(mode="after")
    def _check_even(self) -> "EstimatorConfig":
        if self.interpolated_size % 2 != 0:
            raise ValueError(
                f"window_size * interpolation_factor must be even, "
                f"got {self.interpolated_size}"
            )
        return self

    @property
    def interpolated_size(self) -> int:
        return self.window_size * self.interpolation_factor


class CorrectionStrategy(BaseModel):
    kind: Literal["always_apply", "uncertainty_gate", "hybrid"] = "hybrid"
    # None means: calibrate from the warm-up phase
    u_max: Optional[float] = Field(None, gt=0.0)
    offset_min: float = Field(0.5, gt=0.0)
    warmup_steps: int = Field(50, ge=1)
    warmup_quantile: float = Field(0.75, gt=0.0, le=1.0)

    def with_u_max(self, u_max: float) -> "CorrectionStrategy":
        return self.model_copy(update={"u_max": u_max})


class TrackerConfig(BaseModel):
    measurement_noise: float = Field(0.05, gt=0.0)  # sigma_r, metres
    process_noise_position: float = Field(0.001, ge=0.0)  # sigma_q per second of dt
    initial_velocity_std: float = Field(10.0, gt=0.0)  # m/s


class ExperimentConfig(BaseModel):
    sim: SimConfig = Field(default_factory=SimConfig)
    estimator: EstimatorConfig = Field(default_factory=EstimatorConfig)
    profile: ErrorProfile = Field(default_factory=ErrorProfile)
    strategy: CorrectionStrategy = Field(default_factory=CorrectionStrategy)
    tracker: TrackerConfig = Field(default_factory=TrackerConfig)
    runs: int = Field(1000, ge=1)
    track: bool = True
    plots: bool = True
    rotation_overlay: bool = False
    output_dir: str = "results"
    log_level: Literal["debug", "info", "warning", "error"] = "info"
    # steps after an offset change left out of the settled RMSE; None: one window
    settle_steps: Optional[int] = Field(None, ge=0)

    @model_validator(mode="after")
    def _check_profile_fits(self) -> "ExperimentConfig":
        fine = self.sim.fine_factor
        if self.profile.kind == "steps":
            for step, offset in self.profile.steps:
                scaled = offset * fine
                if abs(scaled - round(scaled)) > 1e-9:
                    raise ValueError(
                        f"step offset {offset} at {step} is not a multiple of "
                        f"1/{fine} coarse steps"
                    )
        reach = max(abs(offset) for offset in self.profile.extreme_offsets())
        if reach > self.sim.margin_steps:
            raise ValueError(
                f"profile offset {reach} exceeds sim.margin_steps "
                f"({self.sim.margin_steps})"
            )
        if reach > self.estimator.window_size / 2:
            raise ValueError(
                f"profile offset {reach} exceeds the estimator reach "
                f"w/2 = {self.estimator.window_size / 2}"
            )
        return self

    @property
    def settle(self) -> int:
        if self.settle_steps is None:
            return self.estimator.window_size
        return self.settle_steps
