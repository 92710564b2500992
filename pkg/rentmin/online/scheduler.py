"""6-competitive online rent minimization.

Time advances over the distinct entry times of J_t. At each one the τ-batch
goes to the semi-online oracle; every 3T rent it adds becomes one
Batch-Rent of 4×[t, t+T) plus 2×[t+T, t+2T). Jobs run by EDF on the
rents placed so far.
"""

from __future__ import annotations

from bisect import bisect_right
from collections import defaultdict
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
import logging
from types import MappingProxyType

from rentmin.diagnostics import INVARIANT_ONLINE_INFEASIBLE, InvariantBreach
from rentmin.feasibility import EdfFailure, edf
from rentmin.model import Instance, Job, OnlineTrace, RentInterval, RentSet, TraceStep
from rentmin.oracle import OracleState, OracleStrategy, oracle_push, tau, tau_batches

logger = logging.getLogger(__name__)

RENTS_NOW = 4
RENTS_LATER = 2
BATCH_SIZE = RENTS_NOW + RENTS_LATER


@dataclass(frozen=True, slots=True)
class BatchRent:
    t: int
    intervals: tuple[RentInterval, ...]

    @staticmethod
    def at(t: int, T: int) -> BatchRent:
        now = RentInterval.of_length(t, T)
        later = RentInterval.of_length(t + T, T)
        return BatchRent(t, (now,) * RENTS_NOW + (later,) * RENTS_LATER)


@dataclass(frozen=True, slots=True)
class EventQueue:
    """Distinct times at which J_t gains jobs, with the jobs entering at each."""

    times: tuple[int, ...]
    batches: Mapping[int, tuple[Job, ...]]

    @staticmethod
    def of(jobs: Iterable[Job], T: int) -> EventQueue:
        grouped = tau_batches(jobs, T)
        return EventQueue(
            times=tuple(t for t, _ in grouped),
            batches=MappingProxyType(dict(grouped)),
        )

    def __len__(self) -> int:
        return len(self.times)


def emergent_entry_time(job: Job, T: int) -> int:
    """The time job enters J_t: visible (r ≤ t) and emergent (d ≤ t + T)."""
    return tau(job, T)


def jobs_at(jobs: Iterable[Job], T: int, t: int) -> list[Job]:
    """J_t."""
    return [job for job in jobs if job.r <= t and job.d <= t + T]


def simulate_online(
    inst: Instance,
    *,
    strategy: OracleStrategy = OracleStrategy.MATCHING,
) -> OnlineTrace:
    if inst.lam != 0:
        raise ValueError("simulate_online runs the λ = 0 model; use simulate_with_delay")
    T = inst.T
    queue = EventQueue.of(inst.jobs, T)
    state = OracleState(T, strategy)
    placed: list[tuple[int, int, tuple[RentInterval, ...]]] = []
    for t in queue.times:
        _, delta = oracle_push(state, queue.batches[t], T)
        rents = BatchRent.at(t, T).intervals * delta
        placed.append((t, delta, rents))

    rent_set = RentSet.of(rent for _, _, rents in placed for rent in rents)
    outcome = edf(inst.jobs, rent_set)
    if isinstance(outcome, EdfFailure):
        raise InvariantBreach.from_spec(INVARIANT_ONLINE_INFEASIBLE, f"fail time {outcome.fail_time}")
    schedule = outcome.schedule

    # every slot lies in a rent decided at or before it, hence after the first event
    by_step: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for job_id, assignment in schedule.assignments.items():
        step = bisect_right(queue.times, assignment.slot) - 1
        by_step[step].append((assignment.slot, job_id))

    steps = tuple(
        TraceStep(
            t=t,
            delta=delta,
            rents=rents,
            assigned=tuple((job_id, slot) for slot, job_id in sorted(by_step[index])),
        )
        for index, (t, delta, rents) in enumerate(placed)
    )
    batches = sum(delta for _, delta, _ in placed)
    logger.debug("online: %d jobs, %d events, %d batches", inst.n, len(queue), batches)
    return OnlineTrace(
        steps=steps,
        total_rents=len(rent_set),
        total_batches=batches,
        oracle_count=len(state.rents),
        schedule=schedule,
    )


def competitive_ratio(trace: OnlineTrace, opt: int) -> Fraction:
    if opt < 1:
        raise ValueError("Competitive ratio needs opt ≥ 1 (empty instances are excluded)")
    return Fraction(trace.total_rents, opt)
