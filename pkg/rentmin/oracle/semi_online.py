"""Semi-online oracle: 3T rents placed on EDF failure, jobs taken in τ order.

Its rent count never exceeds OPT with length-T rents, and for growing
prefixes J_t it only ever gains copies of [t−T, t+2T). The online
algorithm turns each such increment into one batch of six length-T rents.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from enum import StrEnum
from itertools import groupby
import logging

from rentmin.diagnostics import (
    INVARIANT_ORACLE_INFEASIBLE,
    ORACLE_TAU_ORDER,
    InvariantBreach,
    ValidationError,
)
from rentmin.feasibility import SlotMatcher, edf_feasible
from rentmin.model import Job, RentInterval, RentSet

logger = logging.getLogger(__name__)

AUGMENTATION = 3

type OrderKey = Callable[[Job, int], tuple[int, ...]]


class OracleStrategy(StrEnum):
    """How the oracle decides whether an accepted job still fits."""

    MATCHING = "matching"
    EDF = "edf"


def tau(job: Job, T: int) -> int:
    """τ_j = max(r_j, d_j − T): when the job is both visible and emergent."""
    return max(job.r, job.d - T)


def semi_rent(t: int, T: int) -> RentInterval:
    return RentInterval(t - T, t - T + AUGMENTATION * T)


def semi_order(job: Job, T: int) -> tuple[int, ...]:
    return (tau(job, T), job.d, job.r, job.id)


def reversed_tie_order(job: Job, T: int) -> tuple[int, ...]:
    """Same τ order, ties broken the opposite way."""
    return (tau(job, T), -job.d, -job.r, -job.id)


def semi_online(jobs: Iterable[Job], T: int, *, order: OrderKey = semi_order) -> RentSet:
    """Reference run: re-check every prefix with EDF from scratch."""
    accepted: list[Job] = []
    rents: list[RentInterval] = []
    for job in sorted(jobs, key=lambda job: order(job, T)):
        accepted.append(job)
        if not edf_feasible(accepted, RentSet.of(rents)):
            rents.append(semi_rent(tau(job, T), T))
    return RentSet.of(rents)


@dataclass(slots=True)
class OracleState:
    """Incrementally maintained semi-online state; single owner, mutated in place."""

    T: int
    strategy: OracleStrategy = OracleStrategy.MATCHING
    accepted: list[Job] = field(default_factory=list)
    rents: list[RentInterval] = field(default_factory=list)
    last_tau: int | None = None
    _matcher: SlotMatcher = field(default_factory=SlotMatcher, repr=False)

    def rent_set(self) -> RentSet:
        return RentSet.of(self.rents)

    def push(self, batch: Sequence[Job]) -> int:
        """Process one τ-batch; return the number of 3T rents added."""
        if not batch:
            return 0
        t = tau(batch[0], self.T)
        if any(tau(job, self.T) != t for job in batch):
            raise ValidationError.from_spec(ORACLE_TAU_ORDER, f"Batch mixes τ values around {t}.")
        if self.last_tau is not None and t < self.last_tau:
            raise ValidationError.from_spec(ORACLE_TAU_ORDER, f"Batch τ={t} precedes last τ={self.last_tau}.")

        if self.strategy is OracleStrategy.MATCHING:
            # later rents start at t−T or after, so capacity before it is final
            self._matcher.close_before(t - self.T)
        added = 0
        for job in sorted(batch, key=lambda job: (job.d, job.r, job.id)):
            self.accepted.append(job)
            if self._admit(job):
                continue
            rent = semi_rent(t, self.T)
            self.rents.append(rent)
            added += 1
            if not self._readmit(job, rent):
                raise InvariantBreach.from_spec(INVARIANT_ORACLE_INFEASIBLE, f"τ={t}", job_id=job.id)
        self.last_tau = t
        if added:
            logger.debug("oracle τ=%d: +%d rent(s), %d total", t, added, len(self.rents))
        return added

    def _admit(self, job: Job) -> bool:
        if self.strategy is OracleStrategy.MATCHING:
            return self._matcher.try_insert(job)
        return edf_feasible(self.accepted, self.rent_set())

    def _readmit(self, job: Job, rent: RentInterval) -> bool:
        if self.strategy is OracleStrategy.MATCHING:
            self._matcher.add_rent(rent)
            return self._matcher.try_insert(job)
        return edf_feasible(self.accepted, self.rent_set())


def oracle_push(state: OracleState, batch: Sequence[Job], T: int) -> tuple[OracleState, int]:
    """Feed the τ = t batch into `state` (mutated) and report the rents added."""
    if T != state.T:
        raise ValueError(f"Oracle state was built for T={state.T}, got T={T}")
    added = state.push(batch)
    return state, added


def tau_batches(jobs: Iterable[Job], T: int) -> list[tuple[int, tuple[Job, ...]]]:
    """Jobs grouped by τ, ascending."""
    ordered = sorted(jobs, key=lambda job: semi_order(job, T))
    return [(t, tuple(group)) for t, group in groupby(ordered, key=lambda job: tau(job, T))]


def semi_online_incremental(
    jobs: Iterable[Job],
    T: int,
    *,
    strategy: OracleStrategy = OracleStrategy.MATCHING,
) -> RentSet:
    """Replay τ-batches through oracle_push; equals semi_online(jobs, T)."""
    state = OracleState(T, strategy)
    for _, batch in tau_batches(jobs, T):
        oracle_push(state, batch, T)
    return state.rent_set()


def tie_break_counterexample(jobs: Sequence[Job], T: int) -> tuple[int, int] | None:
    """Rent counts under the default and reversed within-τ order, if they differ."""
    default = len(semi_online(jobs, T))
    flipped = len(semi_online(jobs, T, order=reversed_tie_order))
    return None if default == flipped else (default, flipped)


def prefix_growth_breaks(jobs: Iterable[Job], T: int) -> list[int]:
    """Event times t where the output on J_t is not the previous output plus copies of [t−T, t+2T)."""
    breaks: list[int] = []
    seen: list[Job] = []
    previous = RentSet()
    for t, batch in tau_batches(jobs, T):
        seen.extend(batch)
        current = semi_online(seen, T)
        gained = current.difference(previous)
        if not previous.issubset(current) or gained.count(semi_rent(t, T)) != len(gained):
            breaks.append(t)
        previous = current
    return breaks
