"""Exact OPT by iterative deepening over rent start multisets."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from enum import StrEnum
from itertools import combinations_with_replacement
import logging

from rentmin.diagnostics import INVARIANT_CHECKER_DISAGREEMENT, InvariantBreach
from rentmin.feasibility import edf_feasible, is_hall_feasible
from rentmin.model import Job, RentInterval, RentSet
from rentmin.offline.bounds import density_lower_bound

logger = logging.getLogger(__name__)


class OptMethod(StrEnum):
    EXACT = "exact"
    LOWER_BOUND = "lower-bound-only"
    UPPER_BOUND = "upper-bound"


@dataclass(frozen=True, slots=True)
class OptResult:
    """OPT(J, T) or, when the search budget ran out, a lower bound on it."""

    count: int
    rents: RentSet
    method: OptMethod

    @property
    def exact(self) -> bool:
        return self.method is OptMethod.EXACT


def brute_force_opt(
    jobs: Iterable[Job],
    T: int,
    k_max: int | None = None,
    *,
    verify: bool = False,
) -> OptResult:
    """Smallest k such that some k length-T rents are feasible.

    Starts range over [min r, max d − 1]: a rent starting earlier is
    dominated by one starting at min r, one starting later covers nothing.
    `k_max` defaults to the job count (one rent per release always works).
    With `verify`, every candidate is checked by both EDF and Hall.
    """
    job_list = list(jobs)
    if not job_list:
        return OptResult(0, RentSet(), OptMethod.EXACT)
    limit = len(job_list) if k_max is None else k_max
    lower = density_lower_bound(job_list, T)
    starts = range(min(job.r for job in job_list), max(job.d for job in job_list))

    for k in range(lower, limit + 1):
        for chosen in combinations_with_replacement(starts, k):
            rents = RentSet(tuple(RentInterval.of_length(s, T) for s in chosen))
            feasible = edf_feasible(job_list, rents)
            if verify and feasible != is_hall_feasible(job_list, rents):
                raise InvariantBreach.from_spec(INVARIANT_CHECKER_DISAGREEMENT, f"rents {list(rents)}")
            if feasible:
                return OptResult(k, rents, OptMethod.EXACT)

    logger.warning("brute force exhausted k_max=%d for %d jobs", limit, len(job_list))
    return OptResult(max(lower, limit + 1), RentSet(), OptMethod.LOWER_BOUND)
