"""Main CLI interface for rotsync."""

import logging
from pathlib import Path
from typing import List, Optional

import pandas as pd
import typer
from rich import print as rich_print
from rich.console import Console
from rich.table import Table

from ..assessment import resolve_strategy
from ..config.manager import ConfigManager, dump_config
from ..config.models import ExperimentConfig
from ..errors import ArgumentError, ConfigurationError, RotSyncError
from ..estimator import OffsetEstimate, estimate_series
from ..experiments import (
    ESTIMATE_COLUMNS,
    aggregate_estimates,
    aggregate_tracking,
    assess_all,
    estimates_frame,
    frame_to_estimates,
    plot_error_uncertainty,
    plot_offsets,
    plot_velocity,
    run_montecarlo,
    summarize,
    summary_frame,
    track_run,
    trajectory_frame,
    verdicts_frame,
)
from ..simulation import read_simrun, simulate_run, write_csv, write_simrun
from .output import EXIT_USAGE, exit_code_for, staged_output

app = typer.Typer(
    help="rotsync - time offset estimation from rotation magnitudes of rigidly "
    "mounted sensors"
)
console = Console()

logger = logging.getLogger(__name__)

CONFIG_OPTION = typer.Option(
    None, "--config", "-c", help="Configuration file path (YAML)"
)
OUT_OPTION = typer.Option(None, "--out", "-o", help="Output directory")
SEED_OPTION = typer.Option(None, "--seed", help="Base seed, overrides sim.rng_seed")
VERBOSE_OPTION = typer.Option(False, "--verbose", "-v", help="Enable verbose logging")


@app.command()
def simulate(
    config: Optional[str] = CONFIG_OPTION,
    out: Optional[Path] = OUT_OPTION,
    seed: Optional[int] = SEED_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    """Simulate one run and write its CSV set."""
    try:
        cfg = load_experiment(config, verbose, seed)
        out_dir = out or Path(cfg.output_dir)
        run = simulate_run(cfg.sim, cfg.profile, cfg.tracker.measurement_noise)
        with staged_output(out_dir) as stage:
            write_simrun(run, stage)
            dump_config(cfg, stage / "config.yaml")
    except (RotSyncError, OSError) as e:
        abort("simulating", e)
    rich_print(
        f"[green]Simulated {run.coarse_steps} steps (seed {cfg.sim.rng_seed})"
        f" into {out_dir}[/green]"
    )


@app.command()
def estimate(
    simrun: Path = typer.Argument(..., help="Simulation run directory"),
    config: Optional[str] = CONFIG_OPTION,
    out: Optional[Path] = OUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    """Estimate the time offset at every step of a simulation run."""
    try:
        cfg = load_experiment(config, verbose)
        out_dir = out or simrun
        run = read_simrun(simrun, cfg.tracker.measurement_noise)
        r1, r2 = run.magnitudes()
        estimates = estimate_series(r1, r2, cfg.estimator)
        strategy = cfg.strategy
        if estimates:
            strategy = resolve_strategy(
                strategy, estimates, cfg.estimator.uncertainty_epsilon
            )
        with staged_output(out_dir) as stage:
            frame = estimates_frame(estimates, run.truth_offsets)
            write_csv(frame, stage / "estimates.csv")
            write_csv(
                verdicts_frame(assess_all(estimates, strategy)), stage / "verdicts.csv"
            )
    except (RotSyncError, OSError) as e:
        abort("estimating", e)
    show_estimates(estimates, cfg.estimator.uncertainty_epsilon)


@app.command()
def track(
    simrun: Path = typer.Argument(..., help="Simulation run directory"),
    estimates: Optional[Path] = typer.Option(
        None, "--estimates", "-e", help="Estimates CSV (default: SIMRUN/estimates.csv)"
    ),
    config: Optional[str] = CONFIG_OPTION,
    out: Optional[Path] = OUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    """Track the target on raw and on corrected timestamps."""
    try:
        cfg = load_experiment(config, verbose)
        out_dir = out or simrun
        run = read_simrun(simrun, cfg.tracker.measurement_noise)
        offsets = load_estimates(estimates or simrun / "estimates.csv")
        strategy = cfg.strategy
        if offsets:
            strategy = resolve_strategy(
                strategy, offsets, cfg.estimator.uncertainty_epsilon
            )
        impact = track_run(run, offsets, strategy, cfg)
        with staged_output(out_dir) as stage:
            for name, points in impact.passes().items():
                write_csv(trajectory_frame(points), stage / f"track_{name}.csv")
    except (RotSyncError, OSError) as e:
        abort("tracking", e)

    table = Table(title="Velocity RMSE (m/s) around offset changes")
    table.add_column("Pass", style="cyan")
    table.add_column("Settled", style="green")
    table.add_column("Transient", style="yellow")
    transient = impact.transient_rmse()
    for name, rmse in impact.rmse().items():
        table.add_row(name, f"{rmse:.4f}", f"{transient[name]:.4f}")
    console.print(table)
    rich_print(
        "Corrections: "
        + ", ".join(f"{outcome}={count}" for outcome, count in impact.counts.items())
    )


@app.command()
def montecarlo(
    config: Optional[str] = CONFIG_OPTION,
    out: Optional[Path] = OUT_OPTION,
    seed: Optional[int] = SEED_OPTION,
    jobs: Optional[int] = typer.Option(
        None, "--jobs", "-j", min=1, help="Worker processes (default: CPU count)"
    ),
    verbose: bool = VERBOSE_OPTION,
):
    """Run a seeded Monte Carlo batch and aggregate it per step."""
    try:
        cfg = load_experiment(config, verbose, seed)
        out_dir = out or Path(cfg.output_dir)
        results = run_montecarlo(cfg, jobs)
        aggregate = aggregate_estimates(results)
        summary = summarize(results)
        with staged_output(out_dir) as stage:
            write_csv(aggregate, stage / "aggregate.csv")
            write_csv(summary_frame(summary), stage / "summary.csv")
            dump_config(cfg, stage / "config.yaml")
            tracking = aggregate_tracking(results) if cfg.track else None
            if tracking is not None:
                write_csv(tracking, stage / "tracking.csv")
            if cfg.plots:
                rotation = results[0].rotation if cfg.rotation_overlay else None
                plot_offsets(aggregate, stage / "offset.svg", rotation)
                plot_error_uncertainty(aggregate, stage / "error_uncertainty.svg")
                if tracking is not None:
                    plot_velocity(
                        tracking,
                        stage / "velocity.svg",
                        cfg.sim.target_speed,
                    )
    except (RotSyncError, OSError) as e:
        abort("running the Monte Carlo batch", e)

    table = Table(title=f"Monte Carlo summary ({cfg.runs} runs)")
    table.add_column("Metric", style="cyan")
    table.add_column("Value", style="green")
    for metric, value in summary.items():
        table.add_row(metric, f"{value:.6g}")
    console.print(table)
    rich_print(f"[green]Results written to {out_dir}[/green]")


@app.command()
def validate(
    config: str = typer.Option(
        ..., "--config", "-c", help="Configuration file path"
    ),
):
    """Validate a configuration file."""
    issues = ConfigManager(config).validate_config()
    if not issues:
        rich_print("[green]Configuration is valid![/green]")
        return
    rich_print("[red]Configuration validation failed:[/red]")
    for issue in issues:
        rich_print(f"  [red]•[/red] {issue}")
    raise typer.Exit(EXIT_USAGE)


def load_experiment(
    config_path: Optional[str], verbose: bool, seed: Optional[int] = None
) -> ExperimentConfig:
    """Load the configuration, apply the seed override and set up logging."""
    cfg = ConfigManager(config_path).load_config()
    if seed is not None:
        if seed < 0 or seed >= 2**64:
            raise ConfigurationError(f"--seed must be an unsigned 64-bit value: {seed}")
        cfg = cfg.model_copy(
            update={"sim": cfg.sim.model_copy(update={"rng_seed": seed})}
        )
    setup_logging(verbose, cfg.log_level)
    return cfg


def load_estimates(path: Path) -> List[OffsetEstimate]:
    if not path.is_file():
        raise ArgumentError(f"Estimates file not found: {path}")
    frame = pd.read_csv(path, float_precision="round_trip")
    missing = [c for c in ESTIMATE_COLUMNS[:3] if c not in frame.columns]
    if missing:
        raise ArgumentError(f"{path} lacks columns: {', '.join(missing)}")
    return frame_to_estimates(frame)


def show_estimates(estimates: List[OffsetEstimate], eps: float) -> None:
    if not estimates:
        rich_print("[yellow]Series too short to fill an estimation window[/yellow]")
        return
    saturated = sum(est.saturated(eps) for est in estimates)
    last = estimates[-1]
    rich_print(
        f"[green]{len(estimates)} estimates written[/green]; last offset "
        f"{last.offset:+.3f} steps at k={last.timestamp} (uncertainty "
        f"{last.uncertainty:.4g})"
    )
    if saturated:
        rich_print(
            f"[yellow]{saturated} estimate(s) had no rotational change "
            f"(uncertainty saturated)[/yellow]"
        )


def abort(action: str, error: BaseException) -> None:
    rich_print(f"[red]Error {action}: {error}[/red]")
    raise typer.Exit(exit_code_for(error))


def setup_logging(verbose: bool, log_level: str = "info"):
    """Setup logging configuration."""
    level = logging.DEBUG if verbose else getattr(logging, log_level.upper())
    logging.basicConfig(
        level=level, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    )


def main():
    """Main entry point for CLI."""
    app()
