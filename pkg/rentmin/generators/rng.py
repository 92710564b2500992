"""SplitMix64: the fixed generator behind every random instance.

state ← state + 0x9E3779B97F4A7C15 (mod 2^64), then the output is mixed by
z ← (z ^ z>>30)·0xBF58476D1CE4E5B9, z ← (z ^ z>>27)·0x94D049BB133111EB,
z ← z ^ z>>31. Integers in [lo, hi] are lo + next % (hi − lo + 1); the
modulo bias is accepted so other implementations reproduce the stream.
"""

from __future__ import annotations

from typing import Final

MASK64: Final = (1 << 64) - 1
GOLDEN_GAMMA: Final = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed: int) -> None:
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def uniform(self, lo: int, hi: int) -> int:
        """Integer in [lo, hi], inclusive."""
        if hi < lo:
            raise ValueError(f"Empty range [{lo}, {hi}]")
        return lo + self.next_u64() % (hi - lo + 1)
