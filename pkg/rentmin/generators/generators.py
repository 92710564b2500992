"""Seeded instance generators."""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass, replace
from enum import StrEnum
from itertools import combinations_with_replacement
import logging
from math import comb
from typing import Any, Final

from rentmin.diagnostics import (
    GENERATOR_INVALID_PARAMETERS,
    GENERATOR_LARGE_GRID,
    ValidationError,
)
from rentmin.generators.rng import SplitMix64
from rentmin.model import Instance, Job

logger = logging.getLogger(__name__)

RECOMMENDED_MAX_HORIZON: Final = 12
RECOMMENDED_MAX_JOBS: Final = 6
LONG_WINDOW_RENTS: Final = 10
WAVE_SPACING_RENTS: Final = 4


class GenKind(StrEnum):
    EXHAUSTIVE = "exhaustive"
    RANDOM = "random"
    LATE_EMERGENCE = "late-emergence"
    STAIRCASE = "staircase"


@dataclass(frozen=True, slots=True)
class GenSpec:
    """Generator parameters; the same spec always yields the same instances."""

    kind: GenKind = GenKind.RANDOM
    seed: int = 0
    n: int = 8
    horizon: int = 12
    T: int = 3
    lam: int = 0
    min_window: int = 1
    max_window: int = 4
    max_jobs: int = 5

    @staticmethod
    def from_mapping(document: Mapping[str, Any]) -> GenSpec:
        """Build from the JSON block form (`lambda` for λ, hyphens or underscores)."""
        fields = {str(key).replace("-", "_"): value for key, value in document.items()}
        if "lambda" in fields:
            fields["lam"] = fields.pop("lambda")
        unknown = set(fields) - set(GenSpec.__dataclass_fields__)
        if unknown:
            raise ValidationError.from_spec(GENERATOR_INVALID_PARAMETERS, f"Unknown keys {sorted(unknown)}.")
        try:
            fields["kind"] = GenKind(fields.get("kind", GenKind.RANDOM))
        except ValueError as exc:
            raise ValidationError.from_spec(GENERATOR_INVALID_PARAMETERS, str(exc)) from exc
        for name, value in fields.items():
            if name != "kind" and (isinstance(value, bool) or not isinstance(value, int)):
                raise ValidationError.from_spec(GENERATOR_INVALID_PARAMETERS, f"`{name}` must be an integer.")
        return GenSpec(**fields)


def exhaustive_windows(horizon: int, min_window: int = 1) -> list[tuple[int, int]]:
    return [
        (r, d)
        for r in range(horizon)
        for d in range(r + max(min_window, 1), horizon + 1)
    ]


def exhaustive_count(horizon: int, max_jobs: int, min_window: int = 1) -> int:
    """Multisets of at most max_jobs windows: Σ C(W + k − 1, k)."""
    windows = len(exhaustive_windows(horizon, min_window))
    return sum(comb(windows + k - 1, k) for k in range(max_jobs + 1))


def gen_exhaustive(
    T: int,
    horizon: int,
    max_jobs: int,
    *,
    lam: int = 0,
    min_window: int = 1,
) -> Iterator[Instance]:
    """Every multiset of ≤ max_jobs windows 0 ≤ r < d ≤ horizon, once each.

    Windows shorter than λ+1 are left out so every instance validates.
    """
    if T < 1 or horizon < 0 or max_jobs < 0:
        raise ValidationError.from_spec(
            GENERATOR_INVALID_PARAMETERS, f"T={T}, horizon={horizon}, max_jobs={max_jobs}."
        )
    if horizon > RECOMMENDED_MAX_HORIZON or max_jobs > RECOMMENDED_MAX_JOBS:
        logger.warning(
            "%s horizon=%d max_jobs=%d (%d instances)",
            GENERATOR_LARGE_GRID.message,
            horizon,
            max_jobs,
            exhaustive_count(horizon, max_jobs, max(min_window, lam + 1)),
        )
    windows = exhaustive_windows(horizon, max(min_window, lam + 1))
    for k in range(max_jobs + 1):
        for chosen in combinations_with_replacement(windows, k):
            yield Instance(
                T=T,
                lam=lam,
                jobs=tuple(Job(i + 1, r, d) for i, (r, d) in enumerate(chosen)),
            )


def gen_random(spec: GenSpec) -> Instance:
    """n jobs: window w uniform in [min_window, max_window], then r uniform in [0, horizon − w]."""
    if spec.n < 0 or spec.T < 1 or spec.lam < 0:
        raise ValidationError.from_spec(
            GENERATOR_INVALID_PARAMETERS, f"n={spec.n}, T={spec.T}, lambda={spec.lam}."
        )
    if not max(1, spec.lam + 1) <= spec.min_window <= spec.max_window <= spec.horizon:
        raise ValidationError.from_spec(
            GENERATOR_INVALID_PARAMETERS,
            f"Need λ+1 ≤ min_window ≤ max_window ≤ horizon, got "
            f"λ={spec.lam}, [{spec.min_window}, {spec.max_window}], horizon={spec.horizon}.",
        )
    rng = SplitMix64(spec.seed)
    jobs: list[Job] = []
    for i in range(spec.n):
        width = rng.uniform(spec.min_window, spec.max_window)
        r = rng.uniform(0, spec.horizon - width)
        jobs.append(Job(i + 1, r, r + width))
    return Instance(T=spec.T, lam=spec.lam, jobs=tuple(jobs))


def gen_random_stream(spec: GenSpec, count: int) -> Iterator[Instance]:
    """`count` random instances with seeds seed, seed+1, …"""
    for offset in range(count):
        yield gen_random(replace(spec, seed=spec.seed + offset))


def gen_late_emergence(T: int, waves: int) -> Instance:
    """Per wave: a long job (window 10T) and a tight job sharing its deadline.

    Both enter J_t at D − T. Waves are 4T apart so every wave triggers one
    isolated oracle increment; a single wave is the (0, 10T), (9T, 10T) pair.
    """
    if waves < 1 or T < 1:
        raise ValidationError.from_spec(GENERATOR_INVALID_PARAMETERS, f"waves={waves}, T={T}.")
    jobs: list[Job] = []
    for wave in range(waves):
        base = wave * WAVE_SPACING_RENTS * T
        deadline = base + LONG_WINDOW_RENTS * T
        jobs.append(Job(2 * wave + 1, base, deadline))
        jobs.append(Job(2 * wave + 2, deadline - T, deadline))
    return Instance(T=T, jobs=tuple(jobs))


def gen_staircase(T: int, n: int, step: int = 1) -> Instance:
    """All jobs released at 0 with deadlines T, T+step, …: J_t grows by one per event."""
    if n < 0 or T < 1 or step < 1:
        raise ValidationError.from_spec(GENERATOR_INVALID_PARAMETERS, f"n={n}, T={T}, step={step}.")
    return Instance(T=T, jobs=tuple(Job(i + 1, 0, T + i * step) for i in range(n)))


def generate(spec: GenSpec, *, count: int = 1) -> Iterator[Instance]:
    """Instances described by `spec`; `count` applies to random streams."""
    match spec.kind:
        case GenKind.EXHAUSTIVE:
            yield from gen_exhaustive(
                spec.T, spec.horizon, spec.max_jobs, lam=spec.lam, min_window=spec.min_window
            )
        case GenKind.RANDOM:
            yield from gen_random_stream(spec, count)
        case GenKind.LATE_EMERGENCE:
            yield gen_late_emergence(spec.T, spec.n)
        case GenKind.STAIRCASE:
            yield gen_staircase(spec.T, spec.n)
