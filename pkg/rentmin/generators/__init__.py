"""Deterministic instance generators."""

from rentmin.generators.generators import (
    GenKind,
    GenSpec,
    exhaustive_count,
    exhaustive_windows,
    gen_exhaustive,
    gen_late_emergence,
    gen_random,
    gen_random_stream,
    gen_staircase,
    generate,
)
from rentmin.generators.rng import SplitMix64

__all__ = [
    "GenKind",
    "GenSpec",
    "SplitMix64",
    "exhaustive_count",
    "exhaustive_windows",
    "gen_exhaustive",
    "gen_late_emergence",
    "gen_random",
    "gen_random_stream",
    "gen_staircase",
    "generate",
]
