import pandas as pd
import pytest
import yaml
from typer.testing import CliRunner

from rotsync.cli import app
from rotsync.cli.output import exit_code_for
from rotsync.errors import (
    ArgumentError,
    ConfigurationError,
    NumericalError,
    RotSyncError,
    SimulationError,
)
from rotsync.experiments import BatchError
from rotsync.simulation import SIMRUN_FILES

runner = CliRunner()

SMALL = {
    "sim": {"coarse_steps": 60, "fine_factor": 10, "noise_level": 0.2, "rng_seed": 1},
    "estimator": {"window_size": 10, "interpolation_factor": 2},
    "profile": {"kind": "steps", "steps": [[20, 0.5]]},
    "strategy": {"warmup_steps": 10},
    "runs": 2,
}


@pytest.fixture
def config_file(tmp_path):
    def build(**sections):
        data = {**SMALL, **sections}
        path = tmp_path / "config.yaml"
        path.write_text(yaml.safe_dump(data), encoding="utf-8")
        return str(path)

    return build


def invoke(*args):
    return runner.invoke(app, [str(arg) for arg in args])


def simulate(config, out, *extra):
    result = invoke("simulate", "-c", config, "-o", out, *extra)
    assert result.exit_code == 0, result.output
    return out


class TestSimulate:
    def test_writes_the_csv_set(self, config_file, tmp_path):
        out = simulate(config_file(), tmp_path / "run")
        for name in SIMRUN_FILES + ["config.yaml"]:
            assert (out / name).is_file()
        assert len(pd.read_csv(out / "motions_s1.csv")) == 60
        assert len(pd.read_csv(out / "measurements_s2.csv")) == 60
        truth = pd.read_csv(out / "truth_offset.csv")
        assert truth["offset"].iloc[-1] == 0.5

    def test_fine_factor_one(self, config_file, tmp_path):
        sim = {**SMALL["sim"], "fine_factor": 1}
        config = config_file(sim=sim, profile={"kind": "steps", "steps": [[20, 1.0]]})
        out = simulate(config, tmp_path / "run")
        assert len(pd.read_csv(out / "motions_s2.csv")) == 60

    def test_same_seed_same_bytes(self, config_file, tmp_path):
        config = config_file()
        first = simulate(config, tmp_path / "a")
        second = simulate(config, tmp_path / "b")
        for name in SIMRUN_FILES + ["config.yaml"]:
            assert (first / name).read_bytes() == (second / name).read_bytes()

    def test_seed_option(self, config_file, tmp_path):
        config = config_file()
        base = simulate(config, tmp_path / "a")
        other = simulate(config, tmp_path / "b", "--seed", 2)
        motions = "motions_s1.csv"
        assert (base / motions).read_bytes() != (other / motions).read_bytes()
        echoed = yaml.safe_load((other / "config.yaml").read_text(encoding="utf-8"))
        assert echoed["sim"]["rng_seed"] == 2

    def test_no_scratch_directories_remain(self, config_file, tmp_path):
        simulate(config_file(), tmp_path / "run")
        assert sorted(p.name for p in tmp_path.iterdir()) == ["config.yaml", "run"]

    def test_bad_config(self, config_file, tmp_path):
        config = config_file(estimator={"window_size": "wide"})
        result = invoke("simulate", "-c", config, "-o", tmp_path / "run")
        assert result.exit_code == 2
        assert "estimator.window_size" in result.output
        assert not (tmp_path / "run").exists()

    def test_negative_seed(self, config_file, tmp_path):
        result = invoke("simulate", "-c", config_file(), "-o", tmp_path, "--seed", -1)
        assert result.exit_code == 2


class TestEstimateAndTrack:
    def test_estimate_columns(self, config_file, tmp_path):
        config = config_file()
        out = simulate(config, tmp_path / "run")
        result = invoke("estimate", out, "-c", config)
        assert result.exit_code == 0, result.output
        estimates = pd.read_csv(out / "estimates.csv")
        assert list(estimates.columns) == [
            "k",
            "offset",
            "uncertainty",
            "truth_offset",
            "abs_error",
        ]
        assert estimates["k"].tolist() == list(range(9, 60))
        verdicts = pd.read_csv(out / "verdicts.csv")
        assert set(verdicts["state"]) <= {"in_sync", "offset_detected", "unassessable"}

    def test_track_writes_three_passes(self, config_file, tmp_path):
        config = config_file()
        out = simulate(config, tmp_path / "run")
        assert invoke("estimate", out, "-c", config).exit_code == 0
        result = invoke("track", out, "-c", config, "-o", tmp_path / "tracks")
        assert result.exit_code == 0, result.output
        for name in ("raw", "corrected", "oracle"):
            track = pd.read_csv(tmp_path / "tracks" / f"track_{name}.csv")
            assert "speed" in track.columns
        assert len(pd.read_csv(tmp_path / "tracks" / "track_raw.csv")) == 120

    def test_zero_offsets_leave_timestamps_unchanged(self, config_file, tmp_path):
        config = config_file()
        out = simulate(config, tmp_path / "run")
        zeros = tmp_path / "zeros.csv"
        steps = range(9, 60)
        pd.DataFrame(
            {"k": steps, "offset": 0.0, "uncertainty": [0.1 + 0.01 * k for k in steps]}
        ).to_csv(zeros, index=False)
        result = invoke("track", out, "-c", config, "-e", zeros)
        assert result.exit_code == 0, result.output
        raw = (out / "track_raw.csv").read_bytes()
        assert (out / "track_corrected.csv").read_bytes() == raw

    def test_missing_simulation_files(self, config_file, tmp_path):
        result = invoke("estimate", tmp_path / "nowhere", "-c", config_file())
        assert result.exit_code == 2

    def test_track_needs_estimates(self, config_file, tmp_path):
        config = config_file()
        out = simulate(config, tmp_path / "run")
        assert invoke("track", out, "-c", config).exit_code == 2


class TestMonteCarlo:
    def test_outputs(self, config_file, tmp_path):
        out = tmp_path / "mc"
        result = invoke("montecarlo", "-c", config_file(), "-o", out, "-j", 1)
        assert result.exit_code == 0, result.output
        for name in (
            "aggregate.csv",
            "summary.csv",
            "tracking.csv",
            "config.yaml",
            "offset.svg",
            "error_uncertainty.svg",
            "velocity.svg",
        ):
            assert (out / name).is_file()
        aggregate = pd.read_csv(out / "aggregate.csv")
        assert len(aggregate) == 51

    def test_aggregate_is_reproducible(self, config_file, tmp_path):
        config = config_file(plots=False, track=False)
        for out, jobs in (("a", 1), ("b", 1), ("c", 2)):
            out_dir = tmp_path / out
            result = invoke("montecarlo", "-c", config, "-o", out_dir, "-j", jobs)
            assert result.exit_code == 0, result.output
        first = (tmp_path / "a" / "aggregate.csv").read_bytes()
        assert (tmp_path / "b" / "aggregate.csv").read_bytes() == first
        assert (tmp_path / "c" / "aggregate.csv").read_bytes() == first


class TestValidate:
    def test_valid(self, config_file):
        result = invoke("validate", "-c", config_file())
        assert result.exit_code == 0
        assert "valid" in result.output

    def test_invalid(self, config_file):
        result = invoke("validate", "-c", config_file(runs=0))
        assert result.exit_code == 2
        assert "runs" in result.output


def test_exit_codes():
    assert exit_code_for(ConfigurationError("x")) == 2
    assert exit_code_for(ArgumentError("x")) == 2
    assert exit_code_for(FileNotFoundError("x")) == 2
    assert exit_code_for(PermissionError("x")) == 3
    assert exit_code_for(NumericalError("x")) == 4
    assert exit_code_for(SimulationError("x")) == 4
    assert exit_code_for(RotSyncError("x")) == 2
    assert exit_code_for(BatchError(3, 10, SimulationError("x"))) == 4
    assert exit_code_for(RuntimeError("x")) == 1
