"""Active-unit accounting over rent multisets."""

from __future__ import annotations

from collections.abc import Iterable

from rentmin.model import Job, RentSet


def active_units_at(rents: RentSet, t: int) -> int:
    """A_I(t): number of rent copies covering slot [t, t+1)."""
    return sum(1 for interval in rents if interval.contains(t))


def active_units_range(rents: RentSet, r_star: int, d_star: int) -> int:
    """A_I(r*, d*): active units summed over [r*, d*)."""
    if r_star > d_star:
        raise ValueError(f"Expected r_star ≤ d_star, got [{r_star}, {d_star})")
    return sum(interval.overlap(r_star, d_star) for interval in rents)


def jobs_in_window(jobs: Iterable[Job], r_star: int, d_star: int) -> int:
    """|J(r*, d*)|: jobs confined to [r*, d*)."""
    return sum(1 for job in jobs if r_star <= job.r and job.d <= d_star)
