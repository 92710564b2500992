"""Online scheduler."""

from rentmin.online.scheduler import (
    BATCH_SIZE,
    RENTS_LATER,
    RENTS_NOW,
    BatchRent,
    EventQueue,
    competitive_ratio,
    emergent_entry_time,
    jobs_at,
    simulate_online,
)

__all__ = [
    "BATCH_SIZE",
    "RENTS_LATER",
    "RENTS_NOW",
    "BatchRent",
    "EventQueue",
    "competitive_ratio",
    "emergent_entry_time",
    "jobs_at",
    "simulate_online",
]
