"""Streaming wrapper around the window estimator."""

import logging
from collections import deque
from typing import Deque, Optional

from ..config.models import EstimatorConfig
from ..errors import StreamError
from ..signal import MagnitudeWindow
from .offset import OffsetEstimate, estimate_offset

logger = logging.getLogger(__name__)


class OnlineEstimator:
    """Buffers the last ``w`` magnitudes per sensor and estimates on every push.

    One instance serves one sensor pair on one thread.
    """

    def __init__(self, cfg: EstimatorConfig):
        self.cfg = cfg
        self._buffer1: Deque[float] = deque(maxlen=cfg.window_size)
        self._buffer2: Deque[float] = deque(maxlen=cfg.window_size)
        self._last_step: Optional[int] = None
        self._saturated_reported = False

    @property
    def ready(self) -> bool:
        return len(self._buffer1) == self.cfg.window_size

    def push(self, k: int, r1: float, r2: float) -> Optional[OffsetEstimate]:
        """Add the magnitudes of step ``k``; returns an estimate when windows fill."""
        if self._last_step is not None and k != self._last_step + 1:
            raise StreamError(
                f"Steps must increase by one: got {k} after {self._last_step}"
            )
        self._last_step = k
        self._buffer1.append(float(r1))
        self._buffer2.append(float(r2))

        if not self.ready:
            return None

        estimate = estimate_offset(
            MagnitudeWindow(list(self._buffer1), k),
            MagnitudeWindow(list(self._buffer2), k),
            self.cfg,
        )
        if estimate.saturated(self.cfg.uncertainty_epsilon):
            if not self._saturated_reported:
                logger.debug(
                    f"Flat rotation windows at step {k}, uncertainty saturated"
                )
                self._saturated_reported = True
        else:
            self._saturated_reported = False
        return estimate

    def reset(self) -> None:
        self._buffer1.clear()
        self._buffer2.clear()
        self._last_step = None
        self._saturated_reported = False
