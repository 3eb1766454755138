"""Staged output directories and exit codes."""

import logging
import shutil
import tempfile
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator

from ..errors import (
    ArgumentError,
    ConfigurationError,
    NumericalError,
    RotSyncError,
    SimulationError,
    StreamError,
)
from ..experiments import BatchError

logger = logging.getLogger(__name__)

EXIT_USAGE = 2
EXIT_IO = 3
EXIT_NUMERICAL = 4


def exit_code_for(error: BaseException) -> int:
    """Map an exception to the process exit code."""
    if isinstance(error, BatchError):
        return exit_code_for(error.cause)
    if isinstance(error, (ConfigurationError, ArgumentError, StreamError)):
        return EXIT_USAGE
    if isinstance(error, FileNotFoundError):
        return EXIT_USAGE
    if isinstance(error, (NumericalError, SimulationError)):
        return EXIT_NUMERICAL
    if isinstance(error, OSError):
        return EXIT_IO
    if isinstance(error, RotSyncError):
        return EXIT_USAGE
    return 1


@contextmanager
def staged_output(out_dir: Path) -> Iterator[Path]:
    """Yield a scratch directory whose files move into ``out_dir`` on success.

    On failure the scratch directory is removed and ``out_dir`` is left as it was.
    """
    out_dir = Path(out_dir)
    out_dir.parent.mkdir(parents=True, exist_ok=True)
    stage = Path(tempfile.mkdtemp(prefix=f".{out_dir.name}-", dir=out_dir.parent))
    try:
        yield stage
    except BaseException:
        shutil.rmtree(stage, ignore_errors=True)
        raise

    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        for item in sorted(stage.iterdir()):
            target = out_dir / item.name
            if target.is_dir():
                shutil.rmtree(target)
            shutil.move(str(item), str(target))
        logger.info(f"Outputs written to {out_dir}")
    finally:
        shutil.rmtree(stage, ignore_errors=True)
