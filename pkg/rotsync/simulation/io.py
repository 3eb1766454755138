"""CSV persistence of simulation runs."""

import logging
from pathlib import Path
from typing import List, Union

import numpy as np
import pandas as pd

from ..assessment import StampedMeasurement
from ..errors import ArgumentError
from ..geometry import MotionSeries
from .run import SimRun

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.17g"
MOTION_COLUMNS = ["qw", "qx", "qy", "qz", "tx", "ty", "tz"]
SIMRUN_FILES = [
    "motions_s1.csv",
    "motions_s2.csv",
    "truth_offset.csv",
    "measurements_s1.csv",
    "measurements_s2.csv",
    "target_truth.csv",
]


def write_csv(frame: pd.DataFrame, path: Path) -> None:
    """UTF-8, header row, ``.`` decimals, ``\\n`` line endings."""
    frame.to_csv(
        path,
        index=False,
        float_format=FLOAT_FORMAT,
        encoding="utf-8",
        lineterminator="\n",
    )


def _motions_frame(motions: MotionSeries) -> pd.DataFrame:
    data = np.hstack([motions.quaternions, motions.translations])
    frame = pd.DataFrame(data, columns=MOTION_COLUMNS)
    frame.insert(0, "k", np.arange(len(motions)))
    return frame


def _measurements_frame(measurements: List[StampedMeasurement]) -> pd.DataFrame:
    return pd.DataFrame(
        {
            "stamp": [m.timestamp for m in measurements],
            "x": [m.position[0] for m in measurements],
            "y": [m.position[1] for m in measurements],
        }
    )


def write_simrun(run: SimRun, directory: Union[str, Path]) -> List[Path]:
    """Write the run's CSV set into ``directory``; returns the written paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    steps = np.arange(run.coarse_steps)
    frames = {
        "motions_s1.csv": _motions_frame(run.motions1),
        "motions_s2.csv": _motions_frame(run.motions2),
        "truth_offset.csv": pd.DataFrame({"k": steps, "offset": run.truth_offsets}),
        "measurements_s1.csv": _measurements_frame(run.measurements1),
        "measurements_s2.csv": _measurements_frame(run.measurements2),
        "target_truth.csv": pd.DataFrame(
            {"k": steps, "x": run.target_truth[:, 0], "y": run.target_truth[:, 1]}
        ),
    }
    written = []
    for name, frame in frames.items():
        path = directory / name
        write_csv(frame, path)
        written.append(path)
    logger.info(f"Wrote simulation run ({run.coarse_steps} steps) to {directory}")
    return written


def _read(directory: Path, name: str) -> pd.DataFrame:
    return pd.read_csv(directory / name, float_precision="round_trip")


def _measurements(
    frame: pd.DataFrame, sensor_id: int, noise_std: float
) -> List[StampedMeasurement]:
    return [
        StampedMeasurement(sensor_id, float(stamp), np.array([x, y]), noise_std)
        for stamp, x, y in frame[["stamp", "x", "y"]].itertuples(index=False)
    ]


def read_simrun(directory: Union[str, Path], noise_std: float = 0.0) -> SimRun:
    """Load a run written by :func:`write_simrun`."""
    directory = Path(directory)
    missing = [name for name in SIMRUN_FILES if not (directory / name).is_file()]
    if missing:
        raise ArgumentError(
            f"Incomplete simulation directory {directory}: "
            f"missing {', '.join(missing)}"
        )
    motions = []
    for name in ("motions_s1.csv", "motions_s2.csv"):
        frame = _read(directory, name)
        motions.append(
            MotionSeries(
                frame[MOTION_COLUMNS[:4]].to_numpy(),
                frame[MOTION_COLUMNS[4:]].to_numpy(),
            )
        )
    truth = _read(directory, "truth_offset.csv")["offset"].to_numpy()
    target = _read(directory, "target_truth.csv")[["x", "y"]].to_numpy()
    measured = [
        _measurements(_read(directory, f"measurements_s{s}.csv"), s, noise_std)
        for s in (1, 2)
    ]
    return SimRun(
        motions1=motions[0],
        motions2=motions[1],
        truth_offsets=truth,
        measurements1=measured[0],
        measurements2=measured[1],
        target_truth=target,
    )
