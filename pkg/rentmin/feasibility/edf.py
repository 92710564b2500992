"""Earliest Deadline First over a rent multiset, with fail-time reporting."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
import heapq

from rentmin.model import Assignment, Job, RentSet, Schedule


@dataclass(frozen=True, slots=True)
class EdfSuccess:
    schedule: Schedule


@dataclass(frozen=True, slots=True)
class EdfFailure:
    """EDF could not place every job; `fail_time` is the smallest missed deadline."""

    fail_time: int


type EdfOutcome = EdfSuccess | EdfFailure


def edf(jobs: Iterable[Job], rents: RentSet) -> EdfOutcome:
    """Sweep covered slots left to right, running released jobs by (d, id).

    Only slots inside some rent and holding pending work are visited; the
    sweep jumps over idle time. At each slot the capacity is the multiset
    count of covering rents and the copies used are the lowest indices.
    """
    ordered = sorted(jobs, key=lambda job: (job.r, job.d, job.id))
    if not ordered:
        return EdfSuccess(Schedule())

    by_start = sorted(range(len(rents)), key=lambda i: (rents[i].s, i))
    by_end = sorted(range(len(rents)), key=lambda i: (rents[i].c, i))
    active: set[int] = set()
    pending: list[tuple[int, int, int]] = []
    assignments: dict[int, Assignment] = {}
    next_job = next_start = next_end = 0
    t = ordered[0].r

    while next_job < len(ordered) or pending:
        if not pending:
            t = max(t, ordered[next_job].r)
        while next_job < len(ordered) and ordered[next_job].r <= t:
            job = ordered[next_job]
            heapq.heappush(pending, (job.d, job.id, next_job))
            next_job += 1
        while next_start < len(by_start) and rents[by_start[next_start]].s <= t:
            active.add(by_start[next_start])
            next_start += 1
        while next_end < len(by_end) and rents[by_end[next_end]].c <= t:
            active.discard(by_end[next_end])
            next_end += 1

        if pending[0][0] <= t:
            return EdfFailure(pending[0][0])
        if not active:
            if next_start == len(by_start):
                unplaced = [pending[0][0], *(job.d for job in ordered[next_job:])]
                return EdfFailure(min(unplaced))
            t = rents[by_start[next_start]].s
            continue

        count = min(len(active), len(pending))
        copies = heapq.nsmallest(count, active)
        for copy in copies:
            _, job_id, _ = heapq.heappop(pending)
            assignments[job_id] = Assignment(slot=t, copy=copy)
        t += 1

    return EdfSuccess(Schedule.of(assignments))


def edf_feasible(jobs: Iterable[Job], rents: RentSet) -> bool:
    return isinstance(edf(jobs, rents), EdfSuccess)
