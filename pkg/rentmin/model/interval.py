"""RentInterval: a half-open integer interval of machine activity."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, slots=True, order=True)
class RentInterval:
    """
    Half-open interval [s, c) of integer time units.

    Invariant:
    - s < c

    Starts may be negative (semi-online rents begin T before τ).
    """

    s: int
    c: int

    def __post_init__(self) -> None:
        if self.c <= self.s:
            raise ValueError(f"RentInterval invariant violated: c ≤ s in [{self.s}, {self.c})")

    @staticmethod
    def of_length(start: int, length: int) -> RentInterval:
        return RentInterval(start, start + length)

    def length(self) -> int:
        return self.c - self.s

    def contains(self, t: int) -> bool:
        """Check if unit slot [t, t+1) lies inside the interval."""
        return self.s <= t < self.c

    def overlap(self, start: int, end: int) -> int:
        """Number of unit slots shared with [start, end)."""
        return max(0, min(self.c, end) - max(self.s, start))

    def shift(self, delta: int) -> RentInterval:
        return RentInterval(self.s + delta, self.c + delta)

    def as_tuple(self) -> tuple[int, int]:
        return (self.s, self.c)

    def __repr__(self) -> str:
        return f"[{self.s}, {self.c})"
