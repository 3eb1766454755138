import numpy as np
import pytest
from scipy.spatial.transform import Rotation

from rotsync.errors import ArgumentError
from rotsync.geometry import (
    MotionSeries,
    RigidMotion,
    compose,
    cycle_residual,
    inverse,
    rotation_magnitude,
)
from rotsync.geometry import quaternion as quat

Z_AXIS = [0.0, 0.0, 1.0]


def random_motions(rng, count):
    return [RigidMotion.random(rng, translation_scale=2.0) for _ in range(count)]


def test_construction_normalizes_and_canonicalizes():
    m = RigidMotion(np.array([-2.0, 0.0, 0.0, -2.0]), np.zeros(3))
    assert np.linalg.norm(m.rotation) == pytest.approx(1.0, abs=1e-12)
    assert m.rotation[0] >= 0.0
    assert m.is_close(RigidMotion(np.array([1.0, 0.0, 0.0, 1.0]), np.zeros(3)))


def test_construction_rejects_bad_shapes():
    with pytest.raises(ArgumentError):
        RigidMotion(np.zeros(3), np.zeros(3))
    with pytest.raises(ArgumentError):
        RigidMotion(np.zeros(4), np.zeros(3))


def test_compose_identities():
    identity = RigidMotion.identity()
    assert compose(identity, identity).is_close(identity)


def test_compose_quarter_turns_about_z():
    quarter = RigidMotion.from_axis_angle(Z_AXIS, np.pi / 2)
    half = RigidMotion.from_axis_angle(Z_AXIS, np.pi)
    x_axis = [1.0, 0.0, 0.0]
    turned = compose(quarter, quarter).as_rotation().apply(x_axis)
    assert np.allclose(turned, half.as_rotation().apply(x_axis))
    assert np.allclose(turned, [-1.0, 0.0, 0.0])


def test_compose_applies_right_operand_first():
    turn = RigidMotion.from_axis_angle(Z_AXIS, np.pi / 2)
    shift = RigidMotion(translation=[1.0, 0.0, 0.0])
    # shift first, then turn: the translation is rotated onto +y
    assert np.allclose(compose(turn, shift).translation, [0.0, 1.0, 0.0])
    assert np.allclose(compose(shift, turn).translation, [1.0, 0.0, 0.0])


def test_long_chain_with_inverse_chain_is_identity(rng):
    motions = random_motions(rng, 100)
    forward = RigidMotion.identity()
    for m in motions:
        forward = compose(forward, m)
    backward = RigidMotion.identity()
    for m in motions:
        backward = compose(inverse(m), backward)
    assert compose(forward, backward).is_close(RigidMotion.identity(), atol=1e-7)


def test_group_properties(rng):
    for _ in range(50):
        a, b, c = random_motions(rng, 3)
        assert compose(compose(a, b), c).is_close(compose(a, compose(b, c)), atol=1e-9)
        assert compose(a, inverse(a)).is_close(RigidMotion.identity(), atol=1e-9)
        assert compose(inverse(a), a).is_close(RigidMotion.identity(), atol=1e-9)


def test_rotation_magnitude_examples(rng):
    assert rotation_magnitude(RigidMotion.identity()) == 0.0
    turn = RigidMotion.from_axis_angle(Z_AXIS, np.pi / 2, translation=[5.0, -3.0, 1.0])
    assert rotation_magnitude(turn) == pytest.approx(np.pi / 2, abs=1e-12)

    axis = rng.normal(size=3)
    assert rotation_magnitude(RigidMotion.from_axis_angle(axis, 0.3)) == pytest.approx(
        0.3, abs=1e-12
    )


def test_rotation_magnitude_range(rng):
    for m in random_motions(rng, 200):
        assert 0.0 <= rotation_magnitude(m) <= np.pi


def test_rotation_magnitude_ignores_translation(rng):
    axis = rng.normal(size=3)
    a = RigidMotion.from_axis_angle(axis, 1.1)
    b = RigidMotion.from_axis_angle(axis, 1.1, translation=rng.normal(size=3))
    assert rotation_magnitude(a) == rotation_magnitude(b)


def test_conjugation_preserves_rotation_magnitude(rng):
    for _ in range(1000):
        t, va = random_motions(rng, 2)
        vb = compose(compose(inverse(t), va), t)
        assert abs(rotation_magnitude(va) - rotation_magnitude(vb)) < 1e-9


def test_cycle_residual_collapses_for_identity_mount(rng):
    (va,) = random_motions(rng, 1)
    residual = cycle_residual(RigidMotion.identity(), va, va)
    assert residual.is_close(RigidMotion.identity(), atol=1e-12)


def test_cycle_residual_closes_for_consistent_motions(rng):
    for _ in range(100):
        t, va = random_motions(rng, 2)
        vb = compose(compose(t, va), inverse(t))
        assert rotation_magnitude(cycle_residual(t, va, vb)) < 1e-9
        # the same cycle written with the mount pointing the other way
        vb_reverse = compose(compose(inverse(t), va), t)
        assert rotation_magnitude(cycle_residual(inverse(t), va, vb_reverse)) < 1e-9


def test_cycle_residual_detects_independent_motions(rng):
    t, va, vb = random_motions(rng, 3)
    assert rotation_magnitude(va) != pytest.approx(rotation_magnitude(vb), abs=1e-6)
    assert not cycle_residual(t, va, vb).is_close(RigidMotion.identity(), atol=1e-6)


def test_angle_is_accurate_near_zero():
    q = quat.from_axis_angle(np.array(Z_AXIS), 1e-10)
    assert quat.angle(q) == pytest.approx(1e-10, rel=1e-6)


def test_quaternions_are_scalar_first_and_canonical(rng):
    axes = rng.normal(size=(50, 3))
    angles = rng.uniform(-3.0, 3.0, size=50)
    q = quat.from_axis_angle(axes, angles)
    assert np.all(q[:, 0] >= 0.0)
    unit = axes / np.linalg.norm(axes, axis=1, keepdims=True)
    expected = Rotation.from_rotvec(unit * angles[:, None])
    assert np.allclose(quat.to_rotation(q).as_matrix(), expected.as_matrix())
    assert np.allclose(quat.angle(q), np.abs(angles))
    sixty_degrees = quat.from_axis_angle(np.array(Z_AXIS), np.pi / 3)
    assert sixty_degrees[0] == pytest.approx(np.cos(np.pi / 6))
    assert sixty_degrees[3] == pytest.approx(np.sin(np.pi / 6))


def test_zero_quaternion_is_rejected():
    with pytest.raises(ArgumentError):
        quat.normalize(np.zeros((2, 4)))


def test_vector_rotation_matches_compose(rng):
    a, b = random_motions(rng, 2)
    v = rng.normal(size=3)
    chained = a.as_rotation().apply(b.as_rotation().apply(v))
    assert np.allclose(compose(a, b).as_rotation().apply(v), chained)
    assert np.allclose(quat.rotate(a.rotation, v), a.as_rotation().apply(v))


class TestMotionSeries:
    def test_round_trip_through_motions(self, rng):
        motions = random_motions(rng, 5)
        series = MotionSeries.from_motions(motions)
        assert len(series) == 5
        for original, restored in zip(motions, series.to_motions()):
            assert original.is_close(restored, atol=1e-12)
        assert series[2].is_close(motions[2], atol=1e-12)

    def test_magnitudes_match_scalar_extraction(self, rng):
        motions = random_motions(rng, 20)
        series = MotionSeries.from_motions(motions)
        expected = [rotation_magnitude(m) for m in motions]
        assert np.allclose(series.magnitudes(), expected, atol=1e-12)

    def test_compose_matches_scalar_compose(self, rng):
        a = random_motions(rng, 10)
        b = random_motions(rng, 10)
        composed = MotionSeries.from_motions(a).compose(MotionSeries.from_motions(b))
        for i in range(10):
            assert composed[i].is_close(compose(a[i], b[i]), atol=1e-12)

    def test_conjugate_by_matches_scalar_cycle(self, rng):
        motions = random_motions(rng, 10)
        (t,) = random_motions(rng, 1)
        conjugated = MotionSeries.from_motions(motions).conjugate_by(t)
        for m, c in zip(motions, conjugated.to_motions()):
            assert c.is_close(compose(compose(t, m), inverse(t)), atol=1e-12)
            assert rotation_magnitude(cycle_residual(t, m, c)) < 1e-9

    def test_batch_composes_in_temporal_order(self, rng):
        motions = random_motions(rng, 12)
        batched = MotionSeries.from_motions(motions).batch(4)
        assert len(batched) == 3
        for j in range(3):
            expected = RigidMotion.identity()
            for m in motions[4 * j : 4 * j + 4]:
                expected = compose(expected, m)
            assert batched[j].is_close(expected, atol=1e-9)

    def test_batch_factor_one_is_identity_mapping(self, rng):
        series = MotionSeries.from_motions(random_motions(rng, 7))
        batched = series.batch(1)
        assert np.allclose(batched.quaternions, series.quaternions)
        assert np.allclose(batched.translations, series.translations)

    def test_batch_of_identities_is_identity(self):
        batched = MotionSeries.identity(300).batch(100)
        for m in batched.to_motions():
            assert m.is_close(RigidMotion.identity(), atol=1e-12)

    def test_batch_rejects_indivisible_length(self):
        with pytest.raises(ArgumentError):
            MotionSeries.identity(10).batch(3)
        with pytest.raises(ArgumentError):
            MotionSeries.identity(10).batch(0)
