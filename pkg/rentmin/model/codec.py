"""Canonical JSON formats for instances and traces."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
import hashlib
import json
from typing import Any

from rentmin.diagnostics import (
    FORMAT_MALFORMED_JSON,
    FORMAT_MISSING_FIELD,
    FORMAT_NON_INTEGER,
    ValidationError,
)
from rentmin.model.interval import RentInterval
from rentmin.model.trace import OnlineTrace, TraceStep
from rentmin.model.types import Instance, Job, RentSet
from rentmin.model.validate import validate_instance


@dataclass(frozen=True, slots=True)
class ParsedTrace:
    """Trace file contents; delay traces also carry λ and the shifted rents."""

    trace: OnlineTrace
    lam: int = 0
    shifted_rents: RentSet | None = None


def parse_instance(text: bytes | str) -> Instance:
    """Parse and validate an instance document."""
    document = _load_object(text)
    jobs = [
        Job(
            id=_int_field(entry, "id"),
            r=_int_field(entry, "r"),
            d=_int_field(entry, "d"),
        )
        for entry in _list_field(document, "jobs")
    ]
    inst = Instance(
        T=_int_field(document, "T"),
        lam=_int_field(document, "lambda"),
        jobs=tuple(sorted(jobs, key=lambda job: job.id)),
    )
    return validate_instance(inst)


def serialize_instance(inst: Instance) -> bytes:
    """Canonical form: sorted keys, jobs by ascending id, compact separators."""
    document = {
        "T": inst.T,
        "jobs": [{"d": job.d, "id": job.id, "r": job.r} for job in sorted(inst.jobs, key=lambda job: job.id)],
        "lambda": inst.lam,
    }
    return _dump(document)


def instance_digest(inst: Instance) -> str:
    return hashlib.sha256(serialize_instance(inst)).hexdigest()[:16]


def serialize_trace(
    trace: OnlineTrace,
    *,
    lam: int | None = None,
    shifted_rents: RentSet | None = None,
) -> bytes:
    document: dict[str, Any] = {
        "steps": [
            {
                "t": step.t,
                "delta": step.delta,
                "rents": [list(rent.as_tuple()) for rent in step.rents],
                "assigned": [{"id": job_id, "slot": slot} for job_id, slot in step.assigned],
            }
            for step in trace.steps
        ],
        "total_rents": trace.total_rents,
        "total_batches": trace.total_batches,
    }
    if lam is not None:
        document["lambda"] = lam
    if shifted_rents is not None:
        document["shifted_rents"] = [list(rent.as_tuple()) for rent in shifted_rents]
    return _dump(document)


def parse_trace(text: bytes | str) -> ParsedTrace:
    document = _load_object(text)
    steps = tuple(
        TraceStep(
            t=_int_field(entry, "t"),
            delta=_int_field(entry, "delta"),
            rents=tuple(_rent(pair) for pair in _list_field(entry, "rents")),
            assigned=tuple(
                (_int_field(item, "id"), _int_field(item, "slot")) for item in _list_field(entry, "assigned")
            ),
        )
        for entry in _list_field(document, "steps")
    )
    total_batches = _int_field(document, "total_batches")
    trace = OnlineTrace(
        steps=steps,
        total_rents=_int_field(document, "total_rents"),
        total_batches=total_batches,
        oracle_count=total_batches,
    )
    shifted = document.get("shifted_rents")
    shifted_rents = None
    if shifted is not None:
        shifted_rents = RentSet.of(_rent(pair) for pair in _as_list(shifted, "shifted_rents"))
    return ParsedTrace(
        trace=trace,
        lam=_int_field(document, "lambda") if "lambda" in document else 0,
        shifted_rents=shifted_rents,
    )


def _dump(document: Mapping[str, Any]) -> bytes:
    return json.dumps(document, sort_keys=True, separators=(",", ":"), ensure_ascii=False).encode("utf-8")


def _load_object(text: bytes | str) -> Mapping[str, Any]:
    try:
        raw = text.decode("utf-8") if isinstance(text, bytes) else text
        document = json.loads(raw)
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ValidationError.from_spec(FORMAT_MALFORMED_JSON, str(exc)) from exc
    if not isinstance(document, dict):
        raise ValidationError.from_spec(FORMAT_MALFORMED_JSON, "Top level must be an object.")
    return document


def _int_field(document: Any, name: str) -> int:
    if not isinstance(document, dict):
        raise ValidationError.from_spec(FORMAT_MALFORMED_JSON, f"Expected an object holding `{name}`.")
    if name not in document:
        raise ValidationError.from_spec(FORMAT_MISSING_FIELD, f"`{name}`")
    return _as_int(document[name], name)


def _as_int(value: Any, name: str) -> int:
    # bool is an int subclass in Python but not a JSON integer
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError.from_spec(FORMAT_NON_INTEGER, f"`{name}` = {value!r}")
    return value


def _list_field(document: Mapping[str, Any], name: str) -> list[Any]:
    if name not in document:
        raise ValidationError.from_spec(FORMAT_MISSING_FIELD, f"`{name}`")
    return _as_list(document[name], name)


def _as_list(value: Any, name: str) -> list[Any]:
    if not isinstance(value, list):
        raise ValidationError.from_spec(FORMAT_MALFORMED_JSON, f"`{name}` must be a list.")
    return value


def _rent(pair: Any) -> RentInterval:
    items = _as_list(pair, "rents")
    if len(items) != 2:
        raise ValidationError.from_spec(FORMAT_MALFORMED_JSON, f"Rent must be [s, c], got {pair!r}.")
    s, c = _as_int(items[0], "s"), _as_int(items[1], "c")
    if c <= s:
        raise ValidationError.from_spec(FORMAT_MALFORMED_JSON, f"Rent [{s}, {c}) is empty.")
    return RentInterval(s, c)
