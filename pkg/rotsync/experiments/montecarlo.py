"""Monte Carlo batches of independent seeded runs."""

import logging
import os
from typing import Dict, List, Optional

import anyio
import anyio.to_process

from ..config.models import ExperimentConfig
from ..errors import RotSyncError
from .pipeline import RunResult, run_single

logger = logging.getLogger(__name__)


class BatchError(RotSyncError):
    """Raised when a run of a batch fails; names the run's seed."""

    def __init__(self, index: int, seed: int, cause: BaseException):
        self.index = index
        self.seed = seed
        self.cause = cause
        super().__init__(f"Run {index} (seed {seed}) failed: {cause}")


def default_jobs() -> int:
    return os.cpu_count() or 1


class MonteCarloRunner:
    """Runs ``config.runs`` simulations; run ``i`` uses seed ``base_seed + i``."""

    def __init__(
        self,
        config: ExperimentConfig,
        jobs: Optional[int] = None,
        base_seed: Optional[int] = None,
    ):
        self.config = config
        self.jobs = max(1, jobs or default_jobs())
        self.base_seed = config.sim.rng_seed if base_seed is None else base_seed
        self.results: Dict[int, RunResult] = {}
        self._failure: Optional[BatchError] = None

    def seed_for(self, index: int) -> int:
        return self.base_seed + index

    async def run_all(self) -> List[RunResult]:
        """Execute every run and return the results ordered by run index."""
        runs = self.config.runs
        logger.info(
            f"Starting {runs} runs with {self.jobs} job(s), base seed {self.base_seed}"
        )
        self.results = {}
        self._failure = None

        if self.jobs == 1:
            for index in range(runs):
                self._run_in_process(index)
        else:
            limiter = anyio.CapacityLimiter(self.jobs)
            async with anyio.create_task_group() as tg:
                for index in range(runs):
                    tg.start_soon(self._run_in_worker, index, limiter, tg.cancel_scope)

        if self._failure is not None:
            raise self._failure
        logger.info(f"Completed {len(self.results)} runs")
        return [self.results[index] for index in range(runs)]

    def _run_in_process(self, index: int) -> None:
        seed = self.seed_for(index)
        try:
            self.results[index] = run_single(self.config, seed)
        except Exception as e:
            raise BatchError(index, seed, e) from e
        self._log_progress()

    async def _run_in_worker(
        self, index: int, limiter: anyio.CapacityLimiter, scope: anyio.CancelScope
    ) -> None:
        seed = self.seed_for(index)
        try:
            result = await anyio.to_process.run_sync(
                run_single, self.config, seed, limiter=limiter
            )
        except Exception as e:
            # keep the first failure by run index and stop the rest
            failure = BatchError(index, seed, e)
            if self._failure is None or index < self._failure.index:
                self._failure = failure
            logger.error(str(failure))
            scope.cancel()
            return
        self.results[index] = result
        self._log_progress()

    def _log_progress(self) -> None:
        done = len(self.results)
        step = max(1, self.config.runs // 10)
        if done % step == 0 or done == self.config.runs:
            logger.info(f"Finished {done}/{self.config.runs} runs")


def run_montecarlo(
    config: ExperimentConfig,
    jobs: Optional[int] = None,
    base_seed: Optional[int] = None,
) -> List[RunResult]:
    """Blocking entry point around :class:`MonteCarloRunner`."""
    runner = MonteCarloRunner(config, jobs, base_seed)
    return anyio.run(runner.run_all)
