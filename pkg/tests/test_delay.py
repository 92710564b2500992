import pytest

from rentmin.delay import simulate_with_delay, strip_delay
from rentmin.diagnostics import ValidationError
from rentmin.feasibility import edf_feasible, is_hall_feasible
from rentmin.model import Instance, Job, RentInterval, RentSet, schedule_diagnostics
from rentmin.online import simulate_online


def test_strip_delay_zero_is_identity() -> None:
    inst = Instance(T=10, jobs=(Job(1, 0, 5),))

    assert strip_delay(inst) == inst


def test_strip_delay_reduces_deadlines() -> None:
    inst = Instance(T=10, lam=2, jobs=(Job(1, 0, 5),))

    assert strip_delay(inst) == Instance(T=10, lam=0, jobs=(Job(1, 0, 3),))


def test_strip_delay_rejects_short_window() -> None:
    with pytest.raises(ValidationError) as excinfo:
        strip_delay(Instance(T=10, lam=5, jobs=(Job(1, 0, 5),)))

    assert excinfo.value.diagnostic.code == "INSTANCE_DELAY_WINDOW"
    assert excinfo.value.diagnostic.job_id == 1


def test_simulate_with_delay_zero_matches_online_run() -> None:
    inst = Instance(T=10, jobs=(Job(1, 0, 100), Job(2, 90, 100)))

    delay = simulate_with_delay(inst)

    assert delay.inner == simulate_online(inst)
    assert delay.shifted_rents == delay.inner.rent_set()


def test_simulate_with_delay_shifts_rents_and_slots() -> None:
    inst = Instance(T=10, lam=2, jobs=(Job(1, 0, 5),))

    delay = simulate_with_delay(inst)

    step = delay.inner.steps[0]
    assert (step.t, step.delta) == (0, 1)
    assert delay.inner.rent_set().counts() == {RentInterval(0, 10): 4, RentInterval(10, 20): 2}
    assert delay.shifted_rents.counts() == {RentInterval(2, 12): 4, RentInterval(12, 22): 2}
    assert delay.real_schedule.slot_of(1) == 2
    assert delay.total_rents == 6


def test_delay_rents_start_no_earlier_than_lambda_after_issue() -> None:
    inst = Instance(T=3, lam=2, jobs=(Job(1, 0, 6), Job(2, 4, 9), Job(3, 4, 9)))

    delay = simulate_with_delay(inst)

    for step in delay.inner.steps:
        for rent in step.rents:
            assert rent.shift(delay.lam).s >= step.t + delay.lam


def test_real_schedule_respects_original_deadlines() -> None:
    inst = Instance(T=3, lam=1, jobs=(Job(1, 0, 3), Job(2, 0, 3), Job(3, 2, 7)))

    delay = simulate_with_delay(inst)

    assert is_hall_feasible(inst.jobs, delay.shifted_rents)
    assert edf_feasible(inst.jobs, delay.shifted_rents)
    assert schedule_diagnostics(inst.jobs, delay.shifted_rents, delay.real_schedule) == []
    assert delay.total_rents == delay.inner.total_rents
    assert isinstance(delay.shifted_rents, RentSet)
