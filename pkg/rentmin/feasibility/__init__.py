"""Feasibility engine: active units, Hall condition, EDF and slot matching."""

from rentmin.feasibility.edf import (
    EdfFailure,
    EdfOutcome,
    EdfSuccess,
    edf,
    edf_feasible,
)
from rentmin.feasibility.hall import HallWitness, hall_feasible, is_hall_feasible
from rentmin.feasibility.matching import SlotMatcher
from rentmin.feasibility.units import (
    active_units_at,
    active_units_range,
    jobs_in_window,
)
from rentmin.feasibility.windows import (
    WindowGrid,
    active_units_many,
    supply_prefix,
)

__all__ = [
    "EdfFailure",
    "EdfOutcome",
    "EdfSuccess",
    "HallWitness",
    "SlotMatcher",
    "WindowGrid",
    "active_units_at",
    "active_units_many",
    "active_units_range",
    "edf",
    "edf_feasible",
    "hall_feasible",
    "is_hall_feasible",
    "jobs_in_window",
    "supply_prefix",
]
