"""Offline 2-approximation: cover each EDF fail time from both sides."""

from __future__ import annotations

from collections.abc import Iterable

from rentmin.diagnostics import INVARIANT_TWO_APPROX_NONTERMINATING, InvariantBreach
from rentmin.feasibility import EdfSuccess, edf
from rentmin.model import Job, RentInterval, RentSet


def offline_two_approx(jobs: Iterable[Job], T: int) -> RentSet:
    """Add [t−T, t) and [t, t+T) at each fail time t until EDF succeeds."""
    job_list = list(jobs)
    rents = RentSet()
    iterations = 0
    while True:
        outcome = edf(job_list, rents)
        if isinstance(outcome, EdfSuccess):
            return rents
        iterations += 1
        # each failure is charged to a distinct job deadline
        if iterations > len(job_list):
            raise InvariantBreach.from_spec(
                INVARIANT_TWO_APPROX_NONTERMINATING, f"{iterations} iterations for {len(job_list)} jobs"
            )
        t = outcome.fail_time
        rents = rents.add(RentInterval(t - T, t), RentInterval(t, t + T))
