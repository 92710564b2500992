"""Incremental slot matching for unit jobs.

Keeps a concrete assignment of jobs to unit slots and admits new jobs
through shortest augmenting paths. A job is admitted iff the enlarged job
set is feasible on the current rents, which is the same verdict EDF returns
when re-run from scratch.

Capacity is a step function over time, so rents and windows cost their
number of breakpoints, not their length.

Callers that feed jobs in τ order can close off the past with
`close_before(b)`: no later rent may start before `b`. Jobs with deadline at
most `b` then leave the search. They are folded into a pool of free units
behind `b`: each closed job takes the earliest unit at or after its release.
That pool has, for every x, as many units at or after x as any placement of
the closed jobs could leave free there. Every open job has its deadline
after `b`, so it can use any pool unit at or after its release. Matching the
open jobs into pool plus later capacity is therefore exactly as feasible as
matching everything, and a failed search only walks the open jobs.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right, insort
from collections import deque
import heapq

from rentmin.model import Job, RentInterval


class _Steps:
    """Piecewise-constant count over integer time; zero outside its breakpoints."""

    __slots__ = ("_at", "_value")

    def __init__(self) -> None:
        self._at: list[int] = []
        self._value: list[int] = []

    def add(self, lo: int, hi: int, delta: int) -> None:
        if lo >= hi:
            return
        i = self._cut(lo)
        j = self._cut(hi)
        for k in range(i, j):
            self._value[k] += delta
        self._merge(j)
        self._merge(i)

    def value_at(self, t: int) -> int:
        i = bisect_right(self._at, t) - 1
        return self._value[i] if i >= 0 else 0

    def first_positive(self, t: int) -> int | None:
        """Earliest time ≥ t with a positive count."""
        i = bisect_right(self._at, t) - 1
        if i >= 0 and self._value[i] > 0:
            return t
        k = i + 1
        # equal neighbours are merged, so at most one zero run is skipped
        while k < len(self._at) and self._value[k] <= 0:
            k += 1
        return self._at[k] if k < len(self._at) else None

    def _cut(self, t: int) -> int:
        i = bisect_left(self._at, t)
        if i < len(self._at) and self._at[i] == t:
            return i
        self._at.insert(i, t)
        self._value.insert(i, self._value[i - 1] if i else 0)
        return i

    def _merge(self, i: int) -> None:
        if i >= len(self._at):
            return
        before = self._value[i - 1] if i else 0
        if self._value[i] == before:
            del self._at[i]
            del self._value[i]


class SlotMatcher:
    def __init__(self) -> None:
        self._free = _Steps()
        self._holders: dict[int, list[Job]] = {}
        self._held: list[int] = []
        self._slot_of: dict[int, int] = {}
        self._open: list[tuple[int, int, Job]] = []
        self._boundary: int | None = None
        self._admitted = 0

    def __len__(self) -> int:
        return self._admitted

    @property
    def boundary(self) -> int | None:
        return self._boundary

    def add_rent(self, rent: RentInterval) -> None:
        if self._boundary is not None and rent.s < self._boundary:
            raise ValueError(f"Rent {rent.as_tuple()} starts before the closed boundary {self._boundary}")
        self._free.add(rent.s, rent.c, 1)

    def free_units_at(self, t: int) -> int:
        return self._free.value_at(t)

    def slots(self) -> dict[int, int]:
        """Slots of the jobs that are still open."""
        return dict(self._slot_of)

    def try_insert(self, job: Job) -> bool:
        """Place `job`, moving open jobs if needed; False if impossible."""
        if self._boundary is not None and job.d <= self._boundary:
            raise ValueError(f"Job {job.id} ends at {job.d}, at or before the closed boundary {self._boundary}")
        wanted_by: dict[int, Job] = {}
        queue: deque[Job] = deque([job])
        while queue:
            current = queue.popleft()
            t = self._free.first_positive(current.r)
            if t is not None and t < current.d:
                self._augment(current, t, wanted_by)
                self._admitted += 1
                heapq.heappush(self._open, (job.d, job.id, job))
                return True
            lo = bisect_left(self._held, current.r)
            hi = bisect_left(self._held, current.d)
            for u in self._held[lo:hi]:
                if u in wanted_by:
                    continue
                wanted_by[u] = current
                queue.extend(self._holders[u])
        return False

    def close_before(self, boundary: int) -> int:
        """Fold every open job with deadline ≤ `boundary` into the pool; return how many."""
        if self._boundary is not None and boundary <= self._boundary:
            return 0
        self._boundary = boundary
        closed = 0
        while self._open and self._open[0][0] <= boundary:
            _, _, job = heapq.heappop(self._open)
            self._close(job)
            closed += 1
        return closed

    def _augment(self, mover: Job, target: int, wanted_by: dict[int, Job]) -> None:
        self._free.add(target, target + 1, -1)
        while True:
            source = self._slot_of.get(mover.id)
            self._occupy(mover, target)
            if source is None:
                return
            self._vacate(mover, source)
            mover, target = wanted_by[source], source

    def _close(self, job: Job) -> None:
        own = self._slot_of.pop(job.id)
        free_t = self._free.first_positive(job.r)
        held_t = self._held[bisect_left(self._held, job.r)]
        unit = held_t if free_t is None else min(free_t, held_t)
        self._vacate(job, own)
        if unit == own:
            return
        if unit == free_t:
            self._free.add(unit, unit + 1, -1)
            self._free.add(own, own + 1, 1)
            return
        # every unit at `unit` is held by an open job; it takes over `own`
        other = self._holders[unit][-1]
        self._vacate(other, unit)
        self._occupy(other, own)

    def _occupy(self, job: Job, t: int) -> None:
        holders = self._holders.get(t)
        if holders is None:
            self._holders[t] = holders = []
            insort(self._held, t)
        holders.append(job)
        self._slot_of[job.id] = t

    def _vacate(self, job: Job, t: int) -> None:
        holders = self._holders[t]
        holders.remove(job)
        if not holders:
            del self._holders[t]
            del self._held[bisect_left(self._held, t)]
        if self._slot_of.get(job.id) == t:
            del self._slot_of[job.id]
