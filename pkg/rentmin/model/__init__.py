"""Domain model: jobs, rents, instances, schedules, traces and file formats."""

from rentmin.model.codec import (
    ParsedTrace,
    instance_digest,
    parse_instance,
    parse_trace,
    serialize_instance,
    serialize_trace,
)
from rentmin.model.interval import RentInterval
from rentmin.model.trace import OnlineTrace, TraceStep
from rentmin.model.types import Assignment, Instance, Job, RentSet, Schedule
from rentmin.model.validate import (
    instance_diagnostics,
    schedule_diagnostics,
    validate_instance,
)

__all__ = [
    "Assignment",
    "Instance",
    "Job",
    "OnlineTrace",
    "ParsedTrace",
    "RentInterval",
    "RentSet",
    "Schedule",
    "TraceStep",
    "instance_diagnostics",
    "instance_digest",
    "parse_instance",
    "parse_trace",
    "schedule_diagnostics",
    "serialize_instance",
    "serialize_trace",
    "validate_instance",
]
