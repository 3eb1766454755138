"""SVG line charts of Monte Carlo aggregates."""

import logging
from pathlib import Path
from typing import Optional, Union

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
import pandas as pd  # noqa: E402

logger = logging.getLogger(__name__)

# fixed salt and no date keep the SVG bytes reproducible
matplotlib.rcParams["svg.hashsalt"] = "rotsync"
SVG_METADATA = {"Date": None}


def _save(fig, path: Union[str, Path]) -> Path:
    path = Path(path)
    fig.tight_layout()
    fig.savefig(path, format="svg", metadata=SVG_METADATA)
    plt.close(fig)
    logger.debug(f"Wrote chart {path}")
    return path


def plot_offsets(
    aggregate: pd.DataFrame,
    path: Union[str, Path],
    rotation: Optional[np.ndarray] = None,
) -> Path:
    """Ground-truth offset against the median estimate and its q25-q75 band."""
    fig, ax = plt.subplots(figsize=(8, 4))
    k = aggregate["k"]
    ax.fill_between(
        k,
        aggregate["estimate_q25"],
        aggregate["estimate_q75"],
        color="tab:red",
        alpha=0.25,
        label="estimate q25-q75",
    )
    ax.plot(k, aggregate["truth_offset"], color="black", label="true offset")
    ax.plot(k, aggregate["estimate_median"], color="tab:red", label="median estimate")
    ax.set_xlabel("time step")
    ax.set_ylabel("offset [steps]")

    if rotation is not None:
        overlay = ax.twinx()
        overlay.plot(
            np.arange(len(rotation)), rotation, color="tab:gray", alpha=0.4, lw=0.8
        )
        overlay.set_ylabel("rotation magnitude [rad]")
    ax.legend(loc="upper left")
    return _save(fig, path)


def plot_error_uncertainty(aggregate: pd.DataFrame, path: Union[str, Path]) -> Path:
    """Median absolute error and median uncertainty on twin axes."""
    fig, ax = plt.subplots(figsize=(8, 4))
    k = aggregate["k"]
    ax.plot(k, aggregate["abs_error_median"], color="tab:red", label="|error|")
    ax.set_xlabel("time step")
    ax.set_ylabel("median |error| [steps]", color="tab:red")
    twin = ax.twinx()
    twin.plot(k, aggregate["uncertainty_median"], color="tab:blue", label="uncertainty")
    twin.set_ylabel("median uncertainty", color="tab:blue")
    return _save(fig, path)


def plot_velocity(
    tracking: pd.DataFrame, path: Union[str, Path], true_speed: float
) -> Path:
    """Median tracked speed per tracker pass against the true speed."""
    fig, ax = plt.subplots(figsize=(8, 4))
    colors = {"raw": "tab:blue", "corrected": "tab:red", "oracle": "tab:green"}
    for name, color in colors.items():
        if name in tracking:
            ax.plot(tracking["stamp"], tracking[name], color=color, label=name)
    ax.axhline(true_speed, color="black", ls="--", lw=0.8, label="true speed")
    ax.set_xlabel("time step")
    ax.set_ylabel("speed [m/s]")
    ax.set_ylim(0.0, 2.0 * true_speed if true_speed > 0 else 1.0)
    ax.legend(loc="upper right")
    return _save(fig, path)
