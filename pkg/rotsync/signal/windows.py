"""Sliding windows over rotation-magnitude series and their interpolation."""

from dataclasses import dataclass

import numpy as np

from ..errors import ArgumentError, ConfigurationError


@dataclass(frozen=True, eq=False)
class MagnitudeWindow:
    """The last ``w`` rotation magnitudes of one sensor, ending at step ``anchor``.

    Index ``l`` holds the sample of step ``anchor - w + l + 1``; index ``w - 1`` is
    the newest sample.
    """

    samples: np.ndarray
    anchor: int

    def __post_init__(self):
        samples = np.array(self.samples, dtype=float).reshape(-1)
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)

    @classmethod
    def from_series(
        cls, series: np.ndarray, anchor: int, size: int
    ) -> "MagnitudeWindow":
        """Cut the window of ``size`` samples ending at ``anchor`` out of ``series``."""
        if anchor < size - 1 or anchor >= len(series):
            raise ArgumentError(
                f"Window of size {size} ending at {anchor} does not fit a series "
                f"of length {len(series)}"
            )
        return cls(np.asarray(series)[anchor - size + 1 : anchor + 1], anchor)

    @property
    def size(self) -> int:
        return len(self.samples)

    def total_variation(self) -> float:
        """Sum of absolute changes between consecutive samples."""
        return float(np.sum(np.abs(np.diff(self.samples))))


@dataclass(frozen=True, eq=False)
class InterpolatedWindow:
    """A window up-sampled by factor ``b`` to ``w·b`` samples."""

    samples: np.ndarray
    factor: int
    source_size: int

    @property
    def size(self) -> int:
        return len(self.samples)


def interpolate(win: MagnitudeWindow, b: int) -> InterpolatedWindow:
    """Linearly up-sample ``win`` by ``b``.

    Output index ``l`` sits at source position ``l / b``. The ``b - 1`` trailing
    positions past the newest sample are clamped to its value.
    """
    if b < 1:
        raise ConfigurationError(f"Interpolation factor must be >= 1, got {b}")
    w = win.size
    if w < 2:
        raise ArgumentError(f"Window needs at least 2 samples to interpolate, got {w}")
    positions = np.arange(w * b) / b
    # np.interp clamps beyond the last source position
    samples = np.interp(positions, np.arange(w, dtype=float), win.samples)
    return InterpolatedWindow(samples=samples, factor=b, source_size=w)
