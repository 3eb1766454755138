import numpy as np
import pytest

from rotsync.config.models import (
    ErrorProfile,
    EstimatorConfig,
    PathConfig,
    SimConfig,
)
from rotsync.errors import ArgumentError, SimulationError
from rotsync.estimator import estimate_series
from rotsync.geometry import MotionSeries, RigidMotion
from rotsync.geometry import quaternion as quat
from rotsync.simulation import (
    SIMRUN_FILES,
    apply_error_profile,
    batch_to_coarse,
    derive_noisy_motions,
    generate_paths,
    lissajous_point,
    noise_sigmas,
    offset_series,
    read_simrun,
    simulate_measurements,
    simulate_run,
    write_simrun,
)


def distinct_motions(count):
    """Fine motions whose rotation angle encodes their index."""
    angles = 1e-3 * (np.arange(count) + 1)
    q = quat.from_axis_angle(np.array([0.0, 0.0, 1.0]), angles)
    return MotionSeries(q, np.zeros((count, 3)))


def step_profile(offset, step=1):
    return ErrorProfile(kind="steps", steps=[(step, offset)])


class TestPaths:
    def test_lissajous_examples(self):
        path = PathConfig()
        x, y = lissajous_point(0.0, path)
        assert (x, y) == (0.0, 0.0)
        x, y = lissajous_point(np.pi / 4, path)
        assert x == pytest.approx(30.0)
        assert y == pytest.approx(30.0 * np.cos(3 * np.pi / 4))

    def test_grid_covers_margins(self, small_sim):
        ego, target = generate_paths(small_sim)
        expected = (small_sim.coarse_steps + 2 * small_sim.margin_steps) * 10 + 1
        assert len(ego) == len(target) == expected
        assert ego.times[ego.index_of_step(0)] == 0.0
        assert ego.times[ego.index_of_step(2.5)] == pytest.approx(2.5)

    def test_straight_path(self):
        straight = PathConfig(kind="straight", speed=0.4)
        sim = SimConfig(coarse_steps=20, fine_factor=10, path=straight)
        ego, _ = generate_paths(sim)
        start, end = ego.index_of_step(0), ego.index_of_step(10)
        assert ego.x[end] - ego.x[start] == pytest.approx(4.0)
        assert np.all(ego.y == 0.0)

    def test_target_moves_along_x(self, small_sim):
        _, target = generate_paths(small_sim)
        positions = target.positions()
        start, end = target.index_of_step(0), target.index_of_step(10)
        assert positions[end, 0] - positions[start, 0] == pytest.approx(4.0)
        assert np.all(positions[:, 1] == small_sim.target_start[1])


class TestMotions:
    def test_noise_sigmas_are_relative(self):
        q = quat.from_axis_angle(np.array([0.0, 0.0, 1.0]), np.full(10, 0.5))
        motions = MotionSeries(q, np.tile([2.0, 0.0, 0.0], (10, 1)))
        sigma_rot, sigma_trans = noise_sigmas(motions, 0.1)
        assert sigma_rot == pytest.approx(0.05)
        assert sigma_trans == pytest.approx(0.2)

    def test_noise_free_sensors_share_magnitudes(self, small_sim):
        ego, _ = generate_paths(small_sim)
        s1, s2, mount = derive_noisy_motions(ego, 0.0, 11)
        assert len(s1) == len(ego) - 1
        assert np.allclose(s1.magnitudes(), s2.magnitudes(), atol=1e-12)
        assert not mount.is_close(RigidMotion.identity())

    def test_noisy_sensors_differ(self, small_sim):
        ego, _ = generate_paths(small_sim)
        s1, s2, _ = derive_noisy_motions(ego, 0.5, 11)
        assert not np.allclose(s1.magnitudes(), s2.magnitudes())

    def test_same_seed_is_bitwise_identical(self, small_sim):
        ego, _ = generate_paths(small_sim)
        first = derive_noisy_motions(ego, 0.5, 11)
        second = derive_noisy_motions(ego, 0.5, 11)
        for a, b in zip(first[:2], second[:2]):
            assert np.array_equal(a.quaternions, b.quaternions)
            assert np.array_equal(a.translations, b.translations)
        other = derive_noisy_motions(ego, 0.5, 12)
        assert not np.array_equal(first[0].quaternions, other[0].quaternions)

    def test_explicit_mount_is_used(self, small_sim):
        ego, _ = generate_paths(small_sim)
        mount = RigidMotion.from_axis_angle([1.0, 0.0, 0.0], 0.3)
        _, _, used = derive_noisy_motions(ego, 0.0, 1, mount=mount)
        assert used is mount

    def test_batch_to_coarse_counts(self):
        assert len(batch_to_coarse(MotionSeries.identity(20_000), 100)) == 200
        with pytest.raises(ArgumentError):
            batch_to_coarse(MotionSeries.identity(101), 10)


class TestProfiles:
    def test_no_offset(self):
        assert np.array_equal(offset_series(ErrorProfile(), 50, 100), np.zeros(50))

    def test_ramp_default(self):
        offsets = offset_series(ErrorProfile.ramp_default(200), 200, 100)
        assert offsets[25] == 0.0
        assert offsets[55] == pytest.approx(0.4)
        assert offsets[100] == pytest.approx(1.0)
        assert offsets[199] == pytest.approx(1.0)

    def test_offsets_lie_on_the_fine_grid(self):
        offsets = offset_series(ErrorProfile.ramp_default(200), 200, 100)
        scaled = offsets * 100
        assert np.allclose(scaled, np.round(scaled), atol=1e-9)

    def test_steps(self):
        profile = ErrorProfile(kind="steps", steps=[(10, 0.15), (20, -0.5)])
        offsets = offset_series(profile, 30, 100)
        assert np.all(offsets[:10] == 0.0)
        assert np.allclose(offsets[10:20], 0.15)
        assert np.allclose(offsets[20:], -0.5)

    def test_step_off_the_grid(self):
        with pytest.raises(SimulationError):
            offset_series(step_profile(0.15), 30, 10)

    def test_no_offset_keeps_the_motions(self):
        fine = distinct_motions(400)
        shifted, offsets = apply_error_profile(fine, ErrorProfile(), 10, 20, 100)
        assert np.array_equal(shifted.quaternions, fine.quaternions[100:300])
        assert np.all(offsets == 0.0)

    def test_step_reads_fine_samples_behind(self):
        fine = distinct_motions(400)
        shifted, _ = apply_error_profile(fine, step_profile(0.15), 100, 2, 100)
        # step 0 reads in sync, step 1 reads 15 fine samples behind
        assert np.array_equal(shifted.quaternions[:100], fine.quaternions[100:200])
        assert np.array_equal(shifted.quaternions[100:], fine.quaternions[185:285])

    def test_reading_outside_the_margin(self):
        fine = distinct_motions(200)
        with pytest.raises(SimulationError):
            apply_error_profile(fine, step_profile(-0.5), 10, 20, 0)


class TestMeasurements:
    def test_noise_free_measurements_match_truth(self, small_sim):
        _, target = generate_paths(small_sim)
        offsets = np.zeros(small_sim.coarse_steps)
        s1, s2 = simulate_measurements(target, offsets, 0.0, np.random.default_rng(0))
        for k, (m1, m2) in enumerate(zip(s1, s2)):
            truth = target.positions()[target.index_of_step(k)]
            assert m1.timestamp == m2.timestamp == float(k)
            assert np.array_equal(m1.position, truth)
            assert np.array_equal(m2.position, truth)
            assert (m1.sensor_id, m2.sensor_id) == (1, 2)

    def test_lagging_sensor_is_biased_against_motion(self, small_sim):
        _, target = generate_paths(small_sim)
        offsets = np.full(small_sim.coarse_steps, 0.5)
        s1, s2 = simulate_measurements(target, offsets, 0.0, np.random.default_rng(0))
        bias = np.array([m2.position - m1.position for m1, m2 in zip(s1, s2)])
        assert np.allclose(bias[:, 0], -small_sim.target_speed * 0.5)
        assert np.allclose(bias[:, 1], 0.0)

    def test_noise_level(self):
        sim = SimConfig(coarse_steps=5000, fine_factor=1, margin_steps=0)
        _, target = generate_paths(sim)
        offsets = np.zeros(sim.coarse_steps)
        s1, s2 = simulate_measurements(target, offsets, 0.05, np.random.default_rng(4))
        residuals = []
        for k, (m1, m2) in enumerate(zip(s1, s2)):
            truth = target.positions()[target.index_of_step(k)]
            residuals.extend(m1.position - truth)
            residuals.extend(m2.position - truth)
        assert np.std(residuals) == pytest.approx(0.05, rel=0.05)


class TestSimulateRun:
    def test_shapes(self, small_sim):
        run = simulate_run(small_sim, ErrorProfile(), 0.05)
        assert run.coarse_steps == 120
        assert len(run.motions1) == len(run.motions2) == 120
        assert len(run.measurements1) == len(run.measurements2) == 120
        assert run.target_truth.shape == (120, 2)
        assert run.fine_steps == 1200

    def test_same_seed_same_run(self, small_sim):
        noisy = small_sim.model_copy(update={"noise_level": 0.5})
        first = simulate_run(noisy, ErrorProfile(), 0.05)
        second = simulate_run(noisy, ErrorProfile(), 0.05)
        assert np.array_equal(first.motions2.quaternions, second.motions2.quaternions)
        assert np.array_equal(
            [m.position for m in first.measurements2],
            [m.position for m in second.measurements2],
        )

    def test_seed_argument_overrides_config(self, small_sim):
        noisy = small_sim.model_copy(update={"noise_level": 0.5})
        base = simulate_run(noisy, ErrorProfile(), 0.05)
        same = simulate_run(noisy, ErrorProfile(), 0.05, seed=noisy.rng_seed)
        other = simulate_run(noisy, ErrorProfile(), 0.05, seed=noisy.rng_seed + 1)
        assert np.array_equal(base.motions1.quaternions, same.motions1.quaternions)
        assert not np.array_equal(base.motions1.quaternions, other.motions1.quaternions)

    def test_noise_free_run_is_consistent(self, small_sim, small_estimator):
        run = simulate_run(small_sim, ErrorProfile(), 0.05)
        r1, r2 = run.magnitudes()
        assert np.allclose(r1, r2, atol=1e-12)
        estimates = estimate_series(r1, r2, small_estimator)
        assert all(est.offset == 0.0 for est in estimates)

    def test_truth_offsets_follow_the_profile(self, small_sim):
        profile = ErrorProfile(kind="steps", steps=[(40, 0.5), (80, -1.0)])
        run = simulate_run(small_sim, profile, 0.05)
        assert np.all(run.truth_offsets[:40] == 0.0)
        assert np.all(run.truth_offsets[40:80] == 0.5)
        assert np.all(run.truth_offsets[80:] == -1.0)

    def test_write_and_read_back(self, small_sim, tmp_path):
        noisy = small_sim.model_copy(update={"noise_level": 0.5})
        run = simulate_run(noisy, ErrorProfile(), 0.05)
        written = write_simrun(run, tmp_path / "run")
        assert sorted(p.name for p in written) == sorted(SIMRUN_FILES)

        loaded = read_simrun(tmp_path / "run", noise_std=0.05)
        # quaternions are renormalized on load
        assert np.allclose(
            loaded.motions1.quaternions, run.motions1.quaternions, rtol=0.0, atol=1e-15
        )
        assert np.array_equal(loaded.motions2.translations, run.motions2.translations)
        assert np.array_equal(loaded.truth_offsets, run.truth_offsets)
        assert np.array_equal(loaded.target_truth, run.target_truth)
        assert [m.timestamp for m in loaded.measurements2] == [
            m.timestamp for m in run.measurements2
        ]
        assert loaded.measurements1[3].noise_std == 0.05

    def test_missing_files(self, small_sim, tmp_path):
        write_simrun(simulate_run(small_sim, ErrorProfile(), 0.05), tmp_path)
        (tmp_path / "truth_offset.csv").unlink()
        with pytest.raises(ArgumentError, match="truth_offset.csv"):
            read_simrun(tmp_path)


class TestOffsetRecovery:
    """Noise-free runs with a constant offset from step 1 onward."""

    @pytest.mark.parametrize(
        "offset, window, factor",
        [
            (0.15, 50, 10),
            (1.0, 50, 10),
            (-2.5, 50, 10),
            (0.01, 10, 100),
            (0.0, 50, 10),
        ],
    )
    def test_constant_offset_is_recovered(self, offset, window, factor):
        sim = SimConfig(coarse_steps=120, fine_factor=100, noise_level=0.0, rng_seed=5)
        profile = step_profile(offset) if offset else ErrorProfile()
        run = simulate_run(sim, profile, 0.05)
        cfg = EstimatorConfig(window_size=window, interpolation_factor=factor)
        estimates = estimate_series(*run.magnitudes(), cfg)
        settled = [est for est in estimates if est.timestamp >= 1 + window]
        errors = np.array([abs(est.offset - offset) for est in settled])
        tolerance = 1.0 / factor + 1e-9
        assert len(errors) == 119 - window
        assert np.all(errors <= tolerance), errors.max()
