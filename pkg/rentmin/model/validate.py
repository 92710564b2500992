"""Instance and schedule invariant checks."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable

from rentmin.diagnostics import (
    CHECK_SCHEDULE_INVALID,
    CHECK_UNASSIGNED_JOB,
    INSTANCE_BAD_DELAY,
    INSTANCE_BAD_ID,
    INSTANCE_BAD_RENT_LENGTH,
    INSTANCE_DELAY_WINDOW,
    INSTANCE_DUPLICATE_ID,
    INSTANCE_EMPTY_WINDOW,
    Diagnostic,
    ValidationError,
)
from rentmin.model.types import Instance, Job, RentSet, Schedule


def instance_diagnostics(inst: Instance) -> list[Diagnostic]:
    """All violated instance invariants, in job order."""
    diagnostics: list[Diagnostic] = []
    if inst.T < 1:
        diagnostics.append(Diagnostic.from_spec(INSTANCE_BAD_RENT_LENGTH, f"Got T={inst.T}."))
    if inst.lam < 0:
        diagnostics.append(Diagnostic.from_spec(INSTANCE_BAD_DELAY, f"Got lambda={inst.lam}."))
    seen: set[int] = set()
    for job in inst.jobs:
        if job.id < 1:
            diagnostics.append(Diagnostic.from_spec(INSTANCE_BAD_ID, job_id=job.id))
        if job.id in seen:
            diagnostics.append(Diagnostic.from_spec(INSTANCE_DUPLICATE_ID, job_id=job.id))
        seen.add(job.id)
        if job.d < job.r + 1:
            diagnostics.append(
                Diagnostic.from_spec(INSTANCE_EMPTY_WINDOW, f"Got r={job.r}, d={job.d}.", job_id=job.id)
            )
        elif inst.lam > 0 and job.window() < inst.lam + 1:
            diagnostics.append(
                Diagnostic.from_spec(
                    INSTANCE_DELAY_WINDOW,
                    f"Got d−r={job.window()} < {inst.lam + 1}.",
                    job_id=job.id,
                )
            )
    return diagnostics


def validate_instance(inst: Instance) -> Instance:
    """Return `inst` unchanged, or raise ValidationError for the first violation."""
    diagnostics = instance_diagnostics(inst)
    if diagnostics:
        raise ValidationError(diagnostics[0])
    return inst


def schedule_diagnostics(jobs: Iterable[Job], rents: RentSet, schedule: Schedule) -> list[Diagnostic]:
    """Check every Schedule invariant against the jobs and rent copies."""
    diagnostics: list[Diagnostic] = []
    used: Counter[tuple[int, int]] = Counter()
    for job in jobs:
        assignment = schedule.assignments.get(job.id)
        if assignment is None:
            diagnostics.append(Diagnostic.from_spec(CHECK_UNASSIGNED_JOB, job_id=job.id))
            continue
        slot, copy = assignment.slot, assignment.copy
        if not job.r <= slot <= job.d - 1:
            diagnostics.append(
                Diagnostic.from_spec(
                    CHECK_SCHEDULE_INVALID,
                    f"Slot {slot} outside window [{job.r}, {job.d}).",
                    job_id=job.id,
                )
            )
        if not 0 <= copy < len(rents) or not rents[copy].contains(slot):
            diagnostics.append(
                Diagnostic.from_spec(
                    CHECK_SCHEDULE_INVALID,
                    f"Rent copy {copy} does not cover slot {slot}.",
                    job_id=job.id,
                )
            )
        used[(copy, slot)] += 1
        if used[(copy, slot)] > 1:
            diagnostics.append(
                Diagnostic.from_spec(
                    CHECK_SCHEDULE_INVALID,
                    f"Rent copy {copy} carries two jobs at slot {slot}.",
                    job_id=job.id,
                )
            )
    return diagnostics
