"""Similarity measures between rotation-magnitude windows.

Shifts are expressed in interpolated samples and range over
``[-w̌/2, w̌/2 - 1]``; a shift ``s`` compares ``r1[m]`` with ``r2[m + s]``.
"""

from dataclasses import dataclass
from typing import List, Literal, Tuple

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from ..errors import ArgumentError, ConfigurationError
from .windows import InterpolatedWindow

TauVariant = Literal["intent", "printed"]


@dataclass(frozen=True)
class ShiftScore:
    shift: int
    score: float

    def __post_init__(self):
        if not self.score >= 0.0:
            raise ArgumentError(f"Score must be non-negative, got {self.score}")


def shift_range(w_check: int) -> np.ndarray:
    """All candidate shifts for an interpolated window of size ``w_check``."""
    half = w_check // 2
    return np.arange(-half, w_check - half)


def cross_correlation(f: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Finite periodic cross-correlation ``φ[τ] = Σ f[m]·g[(m+τ) mod N]``."""
    f = np.asarray(f, dtype=float)
    g = np.asarray(g, dtype=float)
    if f.shape != g.shape or f.ndim != 1:
        raise ArgumentError(f"Series shapes differ: {f.shape} != {g.shape}")
    n = len(f)
    if n == 0:
        raise ArgumentError("Cross-correlation needs at least one sample")
    return np.fft.irfft(np.conj(np.fft.rfft(f)) * np.fft.rfft(g), n)


def _check_pair(r1: InterpolatedWindow, r2: InterpolatedWindow) -> int:
    if r1.size != r2.size:
        raise ArgumentError(f"Window sizes differ: {r1.size} != {r2.size}")
    return r1.size


def _check_shift(s: int, w_check: int) -> None:
    if not -(w_check // 2) <= s <= w_check - w_check // 2 - 1:
        raise ArgumentError(f"Shift {s} outside [-{w_check // 2}, {w_check // 2 - 1}]")


def theta(r1: InterpolatedWindow, r2: InterpolatedWindow, s: int) -> float:
    """Sum of absolute differences over the overlap at shift ``s``."""
    w_check = _check_pair(r1, r2)
    _check_shift(s, w_check)
    if s >= 0:
        diff = r1.samples[: w_check - s] - r2.samples[s:]
    else:
        diff = r1.samples[-s:] - r2.samples[: w_check + s]
    return float(np.sum(np.abs(diff)))


def eta(s: int, w_check: int) -> float:
    """Overlap normalization ``1 / (w̌ - |s|)``."""
    if abs(s) >= w_check:
        raise ArgumentError(f"|shift| {abs(s)} leaves no overlap in {w_check} samples")
    return 1.0 / (w_check - abs(s))


def _check_tau_bar(tau_bar: float) -> None:
    if not 0.0 < tau_bar <= 1.0:
        raise ConfigurationError(f"Temporal factor must lie in (0, 1], got {tau_bar}")


def tau_weight(
    m: int, w_check: int, tau_bar: float, variant: TauVariant = "intent"
) -> float:
    """Recency weight of interpolated sample ``m``.

    ``intent`` gives the newest sample (``m = w̌ - 1``) weight 1 and decays towards
    older samples; ``printed`` uses ``τ̄^(m/w̌)``, which decays the other way.
    """
    _check_tau_bar(tau_bar)
    if not 0 <= m < w_check:
        raise ArgumentError(f"Sample index {m} outside [0, {w_check})")
    exponent = (w_check - 1 - m) / w_check if variant == "intent" else m / w_check
    return float(tau_bar**exponent)


def tau_weights(
    w_check: int, tau_bar: float, variant: TauVariant = "intent"
) -> np.ndarray:
    _check_tau_bar(tau_bar)
    m = np.arange(w_check)
    exponent = (w_check - 1 - m) / w_check if variant == "intent" else m / w_check
    return tau_bar**exponent


def similarity_scores(
    r1: np.ndarray,
    r2: np.ndarray,
    tau_bar: float,
    variant: TauVariant = "intent",
) -> Tuple[np.ndarray, np.ndarray]:
    """Extended similarity for every shift, as ``(shifts, scores)`` arrays.

    Evaluates all shifts at once on a ``w̌ x w̌`` grid; entries outside the overlap
    are masked to zero.
    """
    r1 = np.asarray(r1, dtype=float)
    r2 = np.asarray(r2, dtype=float)
    if r1.shape != r2.shape:
        raise ArgumentError(f"Window sizes differ: {r1.shape} != {r2.shape}")
    w_check = len(r1)
    if w_check < 2 or w_check % 2 != 0:
        raise ArgumentError(f"Interpolated window size must be even, got {w_check}")
    half = w_check // 2
    shifts = shift_range(w_check)
    weights = tau_weights(w_check, tau_bar, variant)

    padded = np.concatenate([np.zeros(half), r2, np.zeros(half)])
    # shifted[i, m] = r2[m + shifts[i]]
    shifted = sliding_window_view(padded, w_check)[:w_check]
    m = np.arange(w_check)[None, :]
    partner = m + shifts[:, None]
    overlap = (partner >= 0) & (partner < w_check)
    weight_index = np.where(shifts[:, None] >= 0, m, partner)
    weight_grid = weights[np.clip(weight_index, 0, w_check - 1)]

    terms = np.where(overlap, weight_grid * np.abs(r1[None, :] - shifted), 0.0)
    scores = terms.sum(axis=1) / (w_check - np.abs(shifts))
    return shifts, scores


def extended_similarity(
    r1: InterpolatedWindow,
    r2: InterpolatedWindow,
    tau_bar: float,
    variant: TauVariant = "intent",
) -> List[ShiftScore]:
    """Overlap-normalized, recency-weighted difference score for every shift."""
    _check_pair(r1, r2)
    _check_tau_bar(tau_bar)
    shifts, scores = similarity_scores(r1.samples, r2.samples, tau_bar, variant)
    return [ShiftScore(int(s), float(v)) for s, v in zip(shifts, scores)]
