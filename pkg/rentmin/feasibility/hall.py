"""Hall-condition feasibility: A_I(r*, d*) ≥ |J(r*, d*)| for every window."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from typing import Literal

import numpy as np

from rentmin.feasibility.windows import WindowGrid, supply_prefix
from rentmin.model import Job, RentSet


@dataclass(frozen=True, slots=True)
class HallWitness:
    """A window [r*, d*) whose supply falls short of its demand."""

    r_star: int
    d_star: int
    supply: int
    demand: int

    def render(self) -> str:
        return f"window [{self.r_star}, {self.d_star}): supply {self.supply} < demand {self.demand}"


def hall_feasible(
    jobs: Iterable[Job],
    rents: RentSet,
    *,
    max_deadline: int | None = None,
) -> Literal[True] | HallWitness:
    """Return True if every candidate window has enough supply, else a witness.

    Windows range over distinct releases × distinct deadlines with r* < d*.
    `max_deadline` restricts the check to windows with d* ≤ max_deadline.
    Releases are scanned from latest to earliest; the witness reported is
    the worst window for the first failing release.
    """
    job_list = list(jobs)
    if not job_list:
        return True
    grid = WindowGrid.of(job_list)
    deadline_supply = supply_prefix(rents, grid.deadlines)
    release_supply = supply_prefix(rents, grid.releases)
    limit = len(grid.deadlines)
    if max_deadline is not None:
        limit = int(np.searchsorted(grid.deadlines, max_deadline, side="right"))
    for index, demand in grid.demand_rows():
        r_star = int(grid.releases[index])
        lo = grid.first_deadline_after(r_star)
        if lo >= limit:
            continue
        supply = deadline_supply[lo:limit] - release_supply[index]
        slack = supply - demand[lo:limit]
        worst = int(np.argmin(slack))
        if slack[worst] < 0:
            return HallWitness(
                r_star=r_star,
                d_star=int(grid.deadlines[lo + worst]),
                supply=int(supply[worst]),
                demand=int(demand[lo + worst]),
            )
    return True


def is_hall_feasible(jobs: Iterable[Job], rents: RentSet) -> bool:
    return hall_feasible(jobs, rents) is True
