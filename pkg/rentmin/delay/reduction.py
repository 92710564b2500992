"""Delay λ by reduction: strip λ from deadlines, run the λ = 0 algorithm, start every rent λ later."""

from __future__ import annotations

from dataclasses import dataclass

from rentmin.diagnostics import INSTANCE_DELAY_WINDOW, ValidationError
from rentmin.model import Instance, Job, OnlineTrace, RentSet, Schedule
from rentmin.online import simulate_online
from rentmin.oracle import OracleStrategy


@dataclass(frozen=True, slots=True)
class DelayTrace:
    """Inner trace on the stripped instance plus the rents as they really run.

    A rent issued at t for [s, c) is active on [s+λ, c+λ); decision times
    in `inner` stay the issue times.
    """

    lam: int
    inner: OnlineTrace
    shifted_rents: RentSet
    real_schedule: Schedule

    @property
    def total_rents(self) -> int:
        return self.inner.total_rents


def strip_delay(inst: Instance) -> Instance:
    """Same T and releases, λ = 0, every deadline reduced by λ."""
    for job in inst.jobs:
        if job.window() < inst.lam + 1:
            raise ValidationError.from_spec(
                INSTANCE_DELAY_WINDOW, f"Got d−r={job.window()} < {inst.lam + 1}.", job_id=job.id
            )
    return Instance(
        T=inst.T,
        lam=0,
        jobs=tuple(Job(job.id, job.r, job.d - inst.lam) for job in inst.jobs),
    )


def simulate_with_delay(
    inst: Instance,
    *,
    strategy: OracleStrategy = OracleStrategy.MATCHING,
) -> DelayTrace:
    inner = simulate_online(strip_delay(inst), strategy=strategy)
    # a uniform shift keeps canonical rent order, so copy indices carry over
    return DelayTrace(
        lam=inst.lam,
        inner=inner,
        shifted_rents=inner.rent_set().shift(inst.lam),
        real_schedule=inner.require_schedule().shift(inst.lam),
    )
