from itertools import product
import time

import pytest

from rentmin.feasibility import SlotMatcher, edf_feasible
from rentmin.generators import GenSpec, gen_late_emergence, gen_random
from rentmin.model import Job, RentInterval, RentSet
from rentmin.online import simulate_online
from rentmin.oracle import OracleStrategy, semi_online, semi_online_incremental


def test_slot_matcher_rejects_job_without_capacity() -> None:
    matcher = SlotMatcher()

    assert matcher.try_insert(Job(1, 0, 1)) is False
    assert len(matcher) == 0


def test_slot_matcher_places_first_covered_slot() -> None:
    matcher = SlotMatcher()
    matcher.add_rent(RentInterval(80, 110))

    assert matcher.try_insert(Job(1, 0, 100))
    assert matcher.try_insert(Job(2, 90, 100))
    assert matcher.slots() == {1: 80, 2: 90}


def test_slot_matcher_moves_placed_jobs_along_augmenting_path() -> None:
    matcher = SlotMatcher()
    matcher.add_rent(RentInterval(0, 2))
    assert matcher.try_insert(Job(1, 0, 2))
    assert matcher.slots() == {1: 0}

    # slot 0 is the only choice for job 2, so job 1 has to move to slot 1
    assert matcher.try_insert(Job(2, 0, 1))

    assert matcher.slots() == {1: 1, 2: 0}


def test_slot_matcher_uses_added_rent_copies() -> None:
    matcher = SlotMatcher()
    matcher.add_rent(RentInterval(0, 1))
    assert matcher.try_insert(Job(1, 0, 1))
    assert not matcher.try_insert(Job(2, 0, 1))

    matcher.add_rent(RentInterval(0, 1))

    assert matcher.try_insert(Job(2, 0, 1))
    assert sorted(matcher.slots().values()) == [0, 0]


def test_slot_matcher_agrees_with_edf_on_small_grid() -> None:
    windows = [(r, d) for r in range(3) for d in range(r + 1, 4)]
    rents = RentSet.of([RentInterval(0, 2), RentInterval(1, 3)])
    for chosen in product(windows, repeat=3):
        matcher = SlotMatcher()
        for rent in rents:
            matcher.add_rent(rent)
        accepted: list[Job] = []
        for i, (r, d) in enumerate(chosen):
            job = Job(i + 1, r, d)
            inserted = matcher.try_insert(job)
            assert inserted == edf_feasible([*accepted, job], rents)
            if inserted:
                accepted.append(job)


def test_closed_jobs_keep_their_capacity_out_of_later_windows() -> None:
    matcher = SlotMatcher()
    matcher.add_rent(RentInterval(0, 3))
    assert matcher.try_insert(Job(1, 0, 2))
    assert matcher.try_insert(Job(2, 0, 3))

    assert matcher.close_before(2) == 1
    assert matcher.slots() == {2: 1}
    assert len(matcher) == 2

    assert matcher.try_insert(Job(3, 1, 3))
    assert not matcher.try_insert(Job(4, 0, 3))

    matcher.add_rent(RentInterval(2, 5))

    assert matcher.try_insert(Job(4, 0, 3))
    assert matcher.free_units_at(2) == 0


def test_closing_hands_the_earliest_unit_over_from_an_open_job() -> None:
    matcher = SlotMatcher()
    matcher.add_rent(RentInterval(0, 4))
    assert matcher.try_insert(Job(1, 1, 10))
    assert matcher.try_insert(Job(2, 1, 3))
    assert matcher.slots() == {1: 1, 2: 2}

    # closed job 2 takes unit 1, the earliest after its release; job 1 moves to slot 2
    matcher.close_before(3)

    assert matcher.slots() == {1: 2}
    assert matcher.try_insert(Job(3, 1, 4))
    assert not matcher.try_insert(Job(4, 1, 5))


def test_slot_matcher_refuses_rents_and_jobs_behind_the_boundary() -> None:
    matcher = SlotMatcher()
    matcher.close_before(5)

    assert matcher.boundary == 5
    assert matcher.close_before(4) == 0
    with pytest.raises(ValueError, match="closed boundary 5"):
        matcher.add_rent(RentInterval(4, 8))
    with pytest.raises(ValueError, match="closed boundary 5"):
        matcher.try_insert(Job(1, 0, 5))


def test_slot_matcher_work_does_not_grow_with_rent_length() -> None:
    T = 10**9
    matcher = SlotMatcher()
    matcher.add_rent(RentInterval(0, 3 * T))
    matcher.add_rent(RentInterval(T, 4 * T))

    assert matcher.try_insert(Job(1, 0, 10 * T))
    assert matcher.try_insert(Job(2, 0, 10 * T))
    assert matcher.try_insert(Job(3, 4 * T - 1, 10 * T))
    assert matcher.slots() == {1: 0, 2: 1, 3: 4 * T - 1}
    assert matcher.free_units_at(T) == 2
    assert matcher.free_units_at(4 * T - 1) == 0


def test_large_T_late_emergence_matches_edf_strategy_quickly() -> None:
    inst = gen_late_emergence(10**6, 3)

    start = time.perf_counter()
    matching = simulate_online(inst, strategy=OracleStrategy.MATCHING)
    elapsed = time.perf_counter() - start
    reference = simulate_online(inst, strategy=OracleStrategy.EDF)

    assert matching.rent_set() == reference.rent_set()
    assert matching.oracle_count == 3
    assert elapsed < 2.0


@pytest.mark.parametrize("seed", [3, 11, 29])
def test_tau_order_with_closing_matches_edf_reruns_on_dense_streams(seed: int) -> None:
    inst = gen_random(GenSpec(n=160, horizon=30, T=3, max_window=8, seed=seed))

    assert semi_online_incremental(inst.jobs, inst.T) == semi_online(inst.jobs, inst.T)


def test_dense_stream_stays_fast() -> None:
    # five jobs per slot; a search that walks every saturated slot takes minutes here
    inst = gen_random(GenSpec(n=20_000, horizon=4_000, T=10, max_window=50, seed=1))

    start = time.perf_counter()
    trace = simulate_online(inst)
    elapsed = time.perf_counter() - start

    assert trace.total_rents == 6 * trace.oracle_count
    assert elapsed < 15.0
