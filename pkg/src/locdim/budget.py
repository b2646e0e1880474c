"""Work budgets shared by the exact solvers.

Every potentially exponential search in this package charges its inner-loop
work against a Budget; exceeding it raises, and callers translate that into
an honest "unknown"/interval answer instead of a silent wrong one.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

# Wall-clock checks are comparatively expensive, so they only run once per
# _TIME_CHECK_INTERVAL charged units.
_TIME_CHECK_INTERVAL = 4096


class BudgetExceededError(Exception):
    """A solver ran out of its node or time budget."""


@dataclass
class Budget:
    """Mutable counter of search effort with optional node and time caps."""

    max_nodes: int | None = None
    max_seconds: float | None = None
    nodes: int = 0
    _started: float = field(default_factory=time.monotonic, repr=False)
    _next_time_check: int = field(default=_TIME_CHECK_INTERVAL, repr=False)

    def spend(self, amount: int = 1) -> None:
        self.nodes += amount
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExceededError(
                f"node budget exhausted ({self.nodes} > {self.max_nodes})"
            )
        if self.max_seconds is not None and self.nodes >= self._next_time_check:
            self._next_time_check = self.nodes + _TIME_CHECK_INTERVAL
            if time.monotonic() - self._started > self.max_seconds:
                raise BudgetExceededError(
                    f"time budget exhausted (> {self.max_seconds}s)"
                )

    def exhausted(self) -> bool:
        """True once a cap has been hit; spend() would have raised already."""
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            return True
        if self.max_seconds is not None:
            return time.monotonic() - self._started > self.max_seconds
        return False
