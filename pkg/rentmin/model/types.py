"""Domain types shared by every algorithm."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

from rentmin.model.interval import RentInterval


@dataclass(frozen=True, slots=True)
class Job:
    """Unit job with window [r, d): it runs in one slot t with r ≤ t ≤ d−1."""

    id: int
    r: int
    d: int

    def window(self) -> int:
        return self.d - self.r


@dataclass(frozen=True, slots=True)
class RentSet:
    """Multiset of rent intervals kept in canonical (sorted) order.

    The position of an interval in `intervals` is its copy index; schedules
    refer to rent copies by that index.
    """

    intervals: tuple[RentInterval, ...] = ()

    @staticmethod
    def of(intervals: Iterable[RentInterval]) -> RentSet:
        return RentSet(tuple(sorted(intervals)))

    def __len__(self) -> int:
        return len(self.intervals)

    def __iter__(self) -> Iterator[RentInterval]:
        return iter(self.intervals)

    def __getitem__(self, index: int) -> RentInterval:
        return self.intervals[index]

    def add(self, *intervals: RentInterval) -> RentSet:
        return RentSet.of((*self.intervals, *intervals))

    def counts(self) -> Counter[RentInterval]:
        return Counter(self.intervals)

    def count(self, interval: RentInterval) -> int:
        return self.intervals.count(interval)

    def issubset(self, other: RentSet) -> bool:
        """Multiset inclusion."""
        return not (self.counts() - other.counts())

    def difference(self, other: RentSet) -> RentSet:
        """Multiset difference self − other."""
        return RentSet.of((self.counts() - other.counts()).elements())

    def shift(self, delta: int) -> RentSet:
        return RentSet(tuple(interval.shift(delta) for interval in self.intervals))


@dataclass(frozen=True, slots=True)
class Instance:
    """Rent length T, delay λ (`lam`) and jobs in ascending id order."""

    T: int
    lam: int = 0
    jobs: tuple[Job, ...] = ()

    @property
    def n(self) -> int:
        return len(self.jobs)

    def job_by_id(self) -> Mapping[int, Job]:
        return MappingProxyType({job.id: job for job in self.jobs})

    def horizon(self) -> tuple[int, int]:
        """(min r, max d); (0, 0) when there are no jobs."""
        if not self.jobs:
            return (0, 0)
        return (min(job.r for job in self.jobs), max(job.d for job in self.jobs))


@dataclass(frozen=True, slots=True, order=True)
class Assignment:
    slot: int
    copy: int


@dataclass(frozen=True, slots=True)
class Schedule:
    """Job id → (slot, rent copy index)."""

    assignments: Mapping[int, Assignment] = field(default_factory=lambda: MappingProxyType({}))

    @staticmethod
    def of(assignments: Mapping[int, Assignment]) -> Schedule:
        return Schedule(MappingProxyType(dict(sorted(assignments.items()))))

    def __len__(self) -> int:
        return len(self.assignments)

    def slot_of(self, job_id: int) -> int:
        return self.assignments[job_id].slot

    def slots(self) -> dict[int, int]:
        return {job_id: assignment.slot for job_id, assignment in self.assignments.items()}

    def shift(self, delta: int) -> Schedule:
        return Schedule.of(
            {
                job_id: Assignment(assignment.slot + delta, assignment.copy)
                for job_id, assignment in self.assignments.items()
            }
        )
