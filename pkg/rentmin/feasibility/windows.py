"""Vectorised supply/demand over the candidate window grid."""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from rentmin.model import Job, RentSet

type IntArray = npt.NDArray[np.int64]


def supply_prefix(rents: RentSet, points: IntArray) -> IntArray:
    """P(x) = Σ |rent ∩ (−∞, x)| at every point, so A_I(a, b) = P(b) − P(a)."""
    if len(rents) == 0:
        return np.zeros(len(points), dtype=np.int64)
    starts = np.sort(np.fromiter((rent.s for rent in rents), dtype=np.int64, count=len(rents)))
    ends = np.sort(np.fromiter((rent.c for rent in rents), dtype=np.int64, count=len(rents)))
    start_sums = np.concatenate(([0], np.cumsum(starts)))
    end_sums = np.concatenate(([0], np.cumsum(ends)))
    opened = np.searchsorted(starts, points, side="left")
    closed = np.searchsorted(ends, points, side="left")
    return (opened * points - start_sums[opened]) - (closed * points - end_sums[closed])


def active_units_many(rents: RentSet, points: IntArray) -> IntArray:
    """A_I(t) at every point."""
    if len(rents) == 0:
        return np.zeros(len(points), dtype=np.int64)
    starts = np.sort(np.fromiter((rent.s for rent in rents), dtype=np.int64, count=len(rents)))
    ends = np.sort(np.fromiter((rent.c for rent in rents), dtype=np.int64, count=len(rents)))
    return np.searchsorted(starts, points, side="right") - np.searchsorted(ends, points, side="right")


@dataclass(frozen=True, slots=True)
class WindowGrid:
    """Distinct releases and deadlines of a job list.

    Demand only changes at these coordinates, so Hall-type window
    conditions need checking on this grid alone.
    """

    releases: IntArray
    deadlines: IntArray
    _deadline_index_by_release: dict[int, list[int]]

    @staticmethod
    def of(jobs: Sequence[Job]) -> WindowGrid:
        releases = np.unique(np.fromiter((job.r for job in jobs), dtype=np.int64, count=len(jobs)))
        deadlines = np.unique(np.fromiter((job.d for job in jobs), dtype=np.int64, count=len(jobs)))
        grouped: dict[int, list[int]] = defaultdict(list)
        release_pos = {int(r): i for i, r in enumerate(releases)}
        deadline_pos = {int(d): i for i, d in enumerate(deadlines)}
        for job in jobs:
            grouped[release_pos[job.r]].append(deadline_pos[job.d])
        return WindowGrid(releases, deadlines, dict(grouped))

    def demand_rows(self) -> Iterator[tuple[int, IntArray]]:
        """Yield (release index, row) for releases in descending order.

        row[k] = |J(releases[i], deadlines[k])|. The row is updated in
        place between yields; copy it to keep it.
        """
        row = np.zeros(len(self.deadlines), dtype=np.int64)
        for index in range(len(self.releases) - 1, -1, -1):
            counts = np.bincount(self._deadline_index_by_release[index], minlength=len(self.deadlines))
            row += np.cumsum(counts)
            yield index, row

    def first_deadline_after(self, t: int) -> int:
        """Index of the first deadline strictly greater than t."""
        return int(np.searchsorted(self.deadlines, t, side="right"))
