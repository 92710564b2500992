"""Per-step record of an online simulation."""

from __future__ import annotations

from dataclasses import dataclass

from rentmin.model.interval import RentInterval
from rentmin.model.types import RentSet, Schedule


@dataclass(frozen=True, slots=True)
class TraceStep:
    """One event time: oracle delta, batch rents placed, jobs run in [t, next t)."""

    t: int
    delta: int
    rents: tuple[RentInterval, ...] = ()
    assigned: tuple[tuple[int, int], ...] = ()


@dataclass(frozen=True, slots=True)
class OnlineTrace:
    """Execution record of the online algorithm.

    Invariants:
    - total_rents = 6 × total_batches
    - total_batches = oracle_count
    """

    steps: tuple[TraceStep, ...] = ()
    total_rents: int = 0
    total_batches: int = 0
    oracle_count: int = 0
    schedule: Schedule | None = None

    def rent_set(self) -> RentSet:
        return RentSet.of(rent for step in self.steps for rent in step.rents)

    def slots(self) -> dict[int, int]:
        """Job id → slot as recorded in the steps."""
        return {job_id: slot for step in self.steps for job_id, slot in step.assigned}

    def batch_times(self) -> list[int]:
        """Decision time of every batch, one entry per batch."""
        return [step.t for step in self.steps for _ in range(step.delta)]

    def require_schedule(self) -> Schedule:
        if self.schedule is None:
            raise ValueError("Trace carries no schedule; traces read from files only hold slots")
        return self.schedule
