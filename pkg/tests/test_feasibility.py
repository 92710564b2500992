import numpy as np
import pytest

from rentmin.feasibility import (
    EdfFailure,
    EdfSuccess,
    HallWitness,
    WindowGrid,
    active_units_at,
    active_units_many,
    active_units_range,
    edf,
    edf_feasible,
    hall_feasible,
    is_hall_feasible,
    jobs_in_window,
    supply_prefix,
)
from rentmin.model import Job, RentInterval, RentSet, schedule_diagnostics


def _rents(*pairs: tuple[int, int]) -> RentSet:
    return RentSet.of(RentInterval(s, c) for s, c in pairs)


def _jobs(*windows: tuple[int, int]) -> list[Job]:
    return [Job(i + 1, r, d) for i, (r, d) in enumerate(windows)]


@pytest.mark.parametrize(
    ("rents", "t", "expected"),
    [
        (RentSet(), 5, 0),
        (_rents((0, 10), (0, 10), (5, 15)), 7, 3),
        (_rents((0, 10)), 10, 0),
    ],
    ids=["empty", "overlapping_copies", "half_open_end"],
)
def test_active_units_at(rents: RentSet, t: int, expected: int) -> None:
    assert active_units_at(rents, t) == expected


@pytest.mark.parametrize(
    ("rents", "window", "expected"),
    [
        (_rents((0, 10)), (0, 10), 10),
        (_rents((0, 10)), (5, 20), 5),
        (_rents((-10, 20)), (0, 5), 5),
    ],
    ids=["full_overlap", "partial_overlap", "negative_start"],
)
def test_active_units_range(rents: RentSet, window: tuple[int, int], expected: int) -> None:
    assert active_units_range(rents, *window) == expected


def test_active_units_range_rejects_reversed_window() -> None:
    with pytest.raises(ValueError, match="r_star ≤ d_star"):
        active_units_range(_rents((0, 10)), 5, 4)


def test_active_units_range_is_additive() -> None:
    rents = _rents((-3, 4), (2, 5), (2, 5), (6, 9))
    for a in range(-4, 10):
        for b in range(a, 10):
            for c in range(b, 10):
                assert active_units_range(rents, a, b) + active_units_range(rents, b, c) == active_units_range(
                    rents, a, c
                )


@pytest.mark.parametrize(
    ("window", "expected"),
    [((0, 5), 1), ((1, 5), 0)],
    ids=["inside", "released_before"],
)
def test_jobs_in_window_single_job(window: tuple[int, int], expected: int) -> None:
    assert jobs_in_window(_jobs((0, 5)), *window) == expected


def test_jobs_in_window_counts_only_confined_jobs() -> None:
    assert jobs_in_window(_jobs((0, 100), (90, 100)), 90, 100) == 1


def test_vectorised_supply_matches_scalar_accounting() -> None:
    rents = _rents((-3, 4), (2, 5), (2, 5), (6, 9))
    points = np.arange(-5, 11, dtype=np.int64)

    prefix = supply_prefix(rents, points)
    units = active_units_many(rents, points)

    for i, x in enumerate(points.tolist()):
        assert units[i] == active_units_at(rents, x)
        for j, y in enumerate(points.tolist()):
            if x <= y:
                assert prefix[j] - prefix[i] == active_units_range(rents, x, y)


def test_window_grid_demand_rows_count_confined_jobs() -> None:
    jobs = _jobs((0, 2), (0, 5), (1, 3), (3, 5))
    grid = WindowGrid.of(jobs)

    rows = {int(grid.releases[index]): row.copy().tolist() for index, row in grid.demand_rows()}

    assert grid.releases.tolist() == [0, 1, 3]
    assert grid.deadlines.tolist() == [2, 3, 5]
    for r_star, row in rows.items():
        assert row == [jobs_in_window(jobs, r_star, d) for d in grid.deadlines.tolist()]
    assert grid.first_deadline_after(2) == 1


def test_hall_feasible_vacuous_on_empty_input() -> None:
    assert hall_feasible([], RentSet()) is True


def test_hall_feasible_reports_pigeonhole_witness() -> None:
    result = hall_feasible(_jobs((0, 2), (0, 2), (0, 2)), _rents((0, 2)))

    assert result == HallWitness(r_star=0, d_star=2, supply=2, demand=3)
    assert result.render() == "window [0, 2): supply 2 < demand 3"


def test_hall_feasible_with_long_negative_rent() -> None:
    assert hall_feasible(_jobs((0, 5)), _rents((-10, 20))) is True


def test_hall_feasible_max_deadline_limits_windows() -> None:
    jobs = _jobs((0, 1), (4, 6), (4, 6))
    rents = _rents((0, 5))

    assert isinstance(hall_feasible(jobs, rents), HallWitness)
    assert hall_feasible(jobs, rents, max_deadline=5) is True


def test_edf_empty_input_succeeds() -> None:
    outcome = edf([], RentSet())

    assert isinstance(outcome, EdfSuccess)
    assert len(outcome.schedule) == 0


def test_edf_without_rents_fails_at_deadline() -> None:
    assert edf(_jobs((0, 1)), RentSet()) == EdfFailure(fail_time=1)


def test_edf_places_released_jobs_on_earliest_covered_slots() -> None:
    outcome = edf(_jobs((0, 100), (90, 100)), _rents((80, 110)))

    assert isinstance(outcome, EdfSuccess)
    assert outcome.schedule.slots() == {1: 80, 2: 90}


def test_edf_breaks_deadline_ties_by_id() -> None:
    outcome = edf([Job(5, 0, 3), Job(2, 0, 3)], _rents((0, 3)))

    assert isinstance(outcome, EdfSuccess)
    assert outcome.schedule.slots() == {2: 0, 5: 1}


def test_edf_uses_lowest_copy_indices_and_valid_schedule() -> None:
    jobs = _jobs((0, 2), (0, 2), (0, 2), (1, 3))
    rents = _rents((0, 3), (0, 3))

    outcome = edf(jobs, rents)

    assert isinstance(outcome, EdfSuccess)
    assert outcome.schedule.assignments[1].copy == 0
    assert outcome.schedule.assignments[2].copy == 1
    assert schedule_diagnostics(jobs, rents, outcome.schedule) == []


def test_edf_fail_time_is_smallest_missed_deadline() -> None:
    jobs = _jobs((0, 1), (0, 1), (0, 4))

    outcome = edf(jobs, _rents((0, 1)))

    assert outcome == EdfFailure(fail_time=1)


def test_edf_reports_unreleased_deadlines_when_rents_run_out() -> None:
    outcome = edf(_jobs((0, 2), (5, 7)), _rents((0, 2)))

    assert outcome == EdfFailure(fail_time=7)


def test_edf_jumps_idle_time_between_far_rents() -> None:
    jobs = _jobs((0, 1), (1_000_000, 1_000_001))
    rents = _rents((0, 1), (1_000_000, 1_000_001))

    outcome = edf(jobs, rents)

    assert isinstance(outcome, EdfSuccess)
    assert outcome.schedule.slots() == {1: 0, 2: 1_000_000}


def test_edf_and_hall_agree_on_small_grid() -> None:
    windows = [(r, d) for r in range(4) for d in range(r + 1, 5)]
    rent_sets = [RentSet(), _rents((0, 2)), _rents((0, 2), (2, 4)), _rents((1, 3), (1, 3))]
    for first in windows:
        for second in windows:
            jobs = _jobs(first, second, (0, 4))
            for rents in rent_sets:
                assert edf_feasible(jobs, rents) == is_hall_feasible(jobs, rents)
