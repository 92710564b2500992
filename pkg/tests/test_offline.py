import pytest

from rentmin.feasibility import edf_feasible
from rentmin.model import Job, RentInterval, RentSet
from rentmin.offline import OptMethod, brute_force_opt, density_lower_bound, offline_two_approx
from tests._shared_cases import RENT_CASES, RentCase, case_id


def _jobs(*windows: tuple[int, int]) -> list[Job]:
    return [Job(i + 1, r, d) for i, (r, d) in enumerate(windows)]


def test_two_approx_empty() -> None:
    assert offline_two_approx([], 3) == RentSet()


def test_two_approx_covers_fail_time_from_both_sides() -> None:
    rents = offline_two_approx(_jobs((0, 5)), 3)

    assert rents == RentSet.of([RentInterval(2, 5), RentInterval(5, 8)])


def test_two_approx_duplicate_unit_jobs_reach_ratio_two() -> None:
    jobs = _jobs((0, 1), (0, 1))

    rents = offline_two_approx(jobs, 1)

    assert len(rents) == 4
    assert brute_force_opt(jobs, 1).count == 2
    assert edf_feasible(jobs, rents)


@pytest.mark.parametrize("case", RENT_CASES, ids=case_id)
def test_two_approx_within_twice_opt(case: RentCase) -> None:
    rents = offline_two_approx(case.jobs(), case.T)

    assert edf_feasible(case.jobs(), rents)
    assert len(rents) % 2 == 0
    assert case.opt <= len(rents) <= 2 * case.opt


def test_brute_force_empty() -> None:
    result = brute_force_opt([], 3)

    assert result.count == 0
    assert result.exact


def test_brute_force_pigeonhole() -> None:
    result = brute_force_opt(_jobs((0, 1), (0, 1), (0, 1)), 5)

    assert result.count == 3
    assert result.rents == RentSet.of([RentInterval(0, 5)] * 3)
    assert result.method is OptMethod.EXACT


def test_brute_force_five_jobs_in_two_slots() -> None:
    assert brute_force_opt(_jobs(*[(0, 2)] * 5), 10).count == 3


@pytest.mark.parametrize("case", RENT_CASES, ids=case_id)
def test_brute_force_central_cases(case: RentCase) -> None:
    result = brute_force_opt(case.jobs(), case.T, verify=True)

    assert result.count == case.opt
    assert result.exact
    assert edf_feasible(case.jobs(), result.rents)
    assert all(rent.length() == case.T for rent in result.rents)


def test_brute_force_reports_lower_bound_when_budget_runs_out() -> None:
    jobs = _jobs((0, 1), (5, 6), (10, 11))

    result = brute_force_opt(jobs, 2, k_max=2)

    assert result.method is OptMethod.LOWER_BOUND
    assert not result.exact
    assert result.count == 3
    assert brute_force_opt(jobs, 2).count == 3


@pytest.mark.parametrize(
    ("windows", "T", "expected"),
    [
        ((), 10, 0),
        (((0, 2),) * 5, 10, 3),
        (((0, 1),) * 3, 5, 3),
        (((0, 6),) * 7, 3, 3),
    ],
    ids=["empty", "two_slot_window", "unit_windows", "window_wider_than_rent"],
)
def test_density_lower_bound(windows: tuple[tuple[int, int], ...], T: int, expected: int) -> None:
    assert density_lower_bound(_jobs(*windows), T) == expected


@pytest.mark.parametrize("case", RENT_CASES, ids=case_id)
def test_density_lower_bound_never_exceeds_opt(case: RentCase) -> None:
    assert density_lower_bound(case.jobs(), case.T) <= case.opt
