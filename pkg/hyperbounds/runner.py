"""Asynchronous orchestration of check units."""

from __future__ import annotations

import asyncio
from concurrent.futures import Executor, ProcessPoolExecutor
from datetime import UTC, datetime
import logging
import multiprocessing
import time
from typing import TYPE_CHECKING

from .errors import ConfigError, ResourceLimitError
from .report import CheckRecord, SuiteReport
from .types import CheckOutcome

if TYPE_CHECKING:
    from collections.abc import Sequence

    from .checks import CheckUnit
    from .config import RunConfig

_LOGGER = logging.getLogger(__name__)


class SuiteRunner:
    """Run check units and collect their records in registry order.

    With one worker the units run one at a time on the loop's default
    executor; mpmath keeps its working precision in process-global state, so
    concurrent threads would interfere. With more workers each unit goes to a
    process pool started with the spawn method.
    """

    def __init__(self, workers: int = 1) -> None:
        """Initialize the runner.

        Args:
            workers: Number of worker processes (1 runs sequentially)

        """
        self.workers = workers

    async def _run_unit(self, unit: CheckUnit, executor: Executor | None) -> CheckRecord:
        loop = asyncio.get_running_loop()
        started = time.perf_counter()
        try:
            outcome = await loop.run_in_executor(executor, unit.bound())
        except (ResourceLimitError, ConfigError):
            raise
        except Exception as err:  # noqa: BLE001
            _LOGGER.warning("Check %s raised %s: %s", unit.check_id, type(err).__name__, err)
            outcome = CheckOutcome(
                passed=False,
                witness={"error": str(err), "error_type": type(err).__name__},
            )
        elapsed = time.perf_counter() - started
        _LOGGER.debug("Check %s finished in %.3fs", unit.check_id, elapsed)
        return CheckRecord.from_outcome(unit, outcome, elapsed)

    async def async_run(self, units: Sequence[CheckUnit]) -> list[CheckRecord]:
        """Run every unit.

        Raises:
            ResourceLimitError: If a unit needs more coefficients than the budget
            ConfigError: If a unit rejects its configuration

        """
        if self.workers == 1:
            return [await self._run_unit(unit, None) for unit in units]
        # Spawned workers hold no copy of the parent's threads or locks.
        context = multiprocessing.get_context("spawn")
        with ProcessPoolExecutor(max_workers=self.workers, mp_context=context) as pool:
            return list(
                await asyncio.gather(*(self._run_unit(unit, pool) for unit in units))
            )

    def run_suite(self, config: RunConfig, units: Sequence[CheckUnit]) -> SuiteReport:
        """Run a suite to completion and return its report."""
        _LOGGER.info(
            "Running %s: %d checks on %d worker(s)", config.subcommand, len(units), self.workers
        )
        started_at = datetime.now(UTC).isoformat()
        started = time.perf_counter()
        records = asyncio.run(self.async_run(units))
        report = SuiteReport(
            suite=config.subcommand,
            config=config.as_dict(),
            checks=records,
            timing={
                "started_at": started_at,
                "total_seconds": time.perf_counter() - started,
                "checks": {record.check_id: record.elapsed for record in records},
            },
        )
        _LOGGER.info(
            "Suite %s finished with status %s (%d failed)",
            config.subcommand,
            report.status,
            len(report.failures),
        )
        return report
