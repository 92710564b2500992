"""Density lower bound on OPT."""

from __future__ import annotations

from collections.abc import Iterable

import numpy as np

from rentmin.feasibility import WindowGrid
from rentmin.model import Job


def density_lower_bound(jobs: Iterable[Job], T: int) -> int:
    """max over windows of ⌈|J(r*, d*)| / min(T, d* − r*)⌉.

    A length-T rent supplies at most min(T, d* − r*) units to [r*, d*).
    """
    job_list = list(jobs)
    if not job_list:
        return 0
    grid = WindowGrid.of(job_list)
    best = 0
    for index, demand in grid.demand_rows():
        r_star = int(grid.releases[index])
        lo = grid.first_deadline_after(r_star)
        if lo >= len(grid.deadlines):
            continue
        per_rent = np.minimum(T, grid.deadlines[lo:] - r_star)
        needed = -(-demand[lo:] // per_rent)
        best = max(best, int(needed.max()))
    return best
