"""Memo of computed cohomology spaces and the work limits that gate building them."""

import logging
import threading
from collections.abc import Callable, Hashable
from typing import Any, Optional

from bvh.config import settings
from bvh.errors import BudgetExceededError

logger = logging.getLogger(__name__)


class SpaceStore:
    """Per-key memo with serialised builders; finished entries are read lock-free."""

    def __init__(self, work_budget: int, heavy_threshold: int, heavy: bool = False):
        self.work_budget = work_budget
        self.heavy_threshold = heavy_threshold
        self.heavy = heavy
        self._entries: dict[Hashable, Any] = {}
        self._table_lock = threading.Lock()
        self._build_locks: dict[Hashable, threading.Lock] = {}

    def configure(self, work_budget: Optional[int] = None,
                  heavy_threshold: Optional[int] = None,
                  heavy: Optional[bool] = None) -> None:
        if work_budget is not None:
            self.work_budget = work_budget
        if heavy_threshold is not None:
            self.heavy_threshold = heavy_threshold
        if heavy is not None:
            self.heavy = heavy

    def clear(self) -> None:
        with self._table_lock:
            self._entries.clear()
            self._build_locks.clear()

    def __contains__(self, key: Hashable) -> bool:
        return key in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def allows(self, coordinates: int, rows: int) -> bool:
        """Whether a build of this size passes check_limits."""
        return coordinates <= self.work_budget and (
            rows <= self.heavy_threshold or self.heavy
        )

    def check_limits(self, what: str, coordinates: int, rows: int) -> None:
        """Raise BudgetExceededError when a build would exceed the configured limits."""
        if coordinates > self.work_budget:
            logger.warning(f"{what}: {coordinates} coordinates exceed the budget")
            raise BudgetExceededError(
                f"{what} needs {coordinates} coordinates, budget is {self.work_budget}",
                required=coordinates,
                allowed=self.work_budget,
            )
        if rows > self.heavy_threshold and not self.heavy:
            logger.warning(f"{what}: {rows} rows need the heavy flag")
            raise BudgetExceededError(
                f"{what} needs {rows} coboundary rows; rerun with --heavy "
                f"(threshold {self.heavy_threshold})",
                required=rows,
                allowed=self.heavy_threshold,
            )

    def get_or_build(self, key: Hashable, builder: Callable[[], Any]) -> Any:
        entry = self._entries.get(key)
        if entry is not None:
            return entry
        with self._table_lock:
            lock = self._build_locks.setdefault(key, threading.Lock())
        with lock:
            entry = self._entries.get(key)
            if entry is None:
                entry = builder()
                self._entries[key] = entry
        return entry


store = SpaceStore(settings.WORK_BUDGET, settings.HEAVY_THRESHOLD)
