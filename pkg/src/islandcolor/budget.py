"""Island-local resource accounting: fitness-evaluation budget and deadline."""

from __future__ import annotations

import time

__all__ = ["EvalCounter", "Deadline"]

_UNBOUNDED = 1 << 62


class EvalCounter:
    """Counts fitness evaluations against an optional hard budget.

    One evaluation is charged per candidate solution whose fitness becomes
    known with a consistent conflict table: each initial population member,
    each operator-produced candidate, and each accepted TabuCol move.
    Callers check :attr:`exhausted` before charging, so a bounded counter
    lands exactly on its budget when a run is cut off mid-flight.
    """

    __slots__ = ("count", "budget")

    def __init__(self, budget: int | None = None):
        if budget is not None and budget < 1:
            raise ValueError("fitness evaluation budget must be >= 1")
        self.count = 0
        self.budget = budget

    def add(self, n: int = 1) -> None:
        self.count += n

    @property
    def remaining(self) -> int:
        if self.budget is None:
            return _UNBOUNDED
        return max(self.budget - self.count, 0)

    @property
    def exhausted(self) -> bool:
        return self.budget is not None and self.count >= self.budget


class Deadline:
    """Wall-clock cutoff based on the monotonic clock. None = no limit."""

    __slots__ = ("at",)

    def __init__(self, at: float | None):
        self.at = at

    @classmethod
    def after(cls, seconds: float | None) -> "Deadline":
        if seconds is None:
            return cls(None)
        return cls(time.monotonic() + seconds)

    @property
    def expired(self) -> bool:
        return self.at is not None and time.monotonic() >= self.at
