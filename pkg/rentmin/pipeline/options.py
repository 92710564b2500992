"""Run options for the opt and sweep commands."""

from dataclasses import dataclass
from enum import StrEnum

from rentmin.oracle import OracleStrategy


class OptAlgorithm(StrEnum):
    BRUTE = "brute"
    DENSITY = "density"
    TWO_APPROX = "two-approx"


@dataclass(frozen=True, slots=True)
class SweepOptions:
    """Controls how each instance in a sweep is evaluated."""

    workers: int = 1
    strategy: OracleStrategy = OracleStrategy.MATCHING
    max_brute_jobs: int = 8
    max_brute_horizon: int = 12
    k_max: int | None = None
    cross_check: bool = True
    tie_break_study: bool = False
    show_progress: bool = True

