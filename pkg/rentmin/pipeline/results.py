"""Pipeline run result carriers for CLI entrypoints."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING

from rentmin.offline import OptMethod

if TYPE_CHECKING:
    from rentmin.delay import DelayTrace
    from rentmin.diagnostics import Diagnostic
    from rentmin.model import Instance, OnlineTrace, RentSet
    from rentmin.pipeline.options import OptAlgorithm


@dataclass(frozen=True, slots=True)
class SimulateRunResult:
    """Online run; `delay` is set when the instance has λ > 0."""

    instance: Instance
    trace: OnlineTrace
    delay: DelayTrace | None = None


@dataclass(frozen=True, slots=True)
class CheckRunResult:
    diagnostics: list[Diagnostic]
    has_errors: bool


@dataclass(frozen=True, slots=True)
class OptRunResult:
    algorithm: OptAlgorithm
    count: int
    method: OptMethod
    rents: RentSet | None = None


@dataclass(frozen=True, slots=True)
class RatioRow:
    """One instance of a sweep; ratio is None for empty instances."""

    instance_digest: str
    n: int
    T: int
    lam: int
    online_rents: int
    semi_count: int
    opt: int
    opt_method: OptMethod
    ratio: Fraction | None
    semi_over_opt: bool = False
    cost_identity_failed: bool = False
    tie_break_mismatch: bool = False
    two_approx: int | None = None
    opt_stripped: int | None = None
    prefix_breaks: int = 0

    @property
    def bound(self) -> int:
        return 6 * (self.lam + 1)

    @property
    def violates(self) -> bool:
        return self.opt_method is OptMethod.EXACT and self.ratio is not None and self.ratio > self.bound

    @property
    def two_approx_exceeded(self) -> bool:
        return self.opt_method is OptMethod.EXACT and self.two_approx is not None and self.two_approx > 2 * self.opt

    @property
    def stripped_opt_exceeded(self) -> bool:
        """OPT with deadlines pulled in by λ must stay within (λ+1)·OPT."""
        if self.opt_method is not OptMethod.EXACT or self.opt_stripped is None:
            return False
        return self.opt_stripped > (self.lam + 1) * self.opt


@dataclass(frozen=True, slots=True)
class RatioReport:
    rows: list[RatioRow] = field(default_factory=list)

    def ratios(self) -> list[Fraction]:
        return [row.ratio for row in self.rows if row.ratio is not None]

    @property
    def max_ratio(self) -> Fraction | None:
        ratios = self.ratios()
        return max(ratios) if ratios else None

    @property
    def mean_ratio(self) -> Fraction | None:
        ratios = self.ratios()
        return sum(ratios, Fraction(0)) / len(ratios) if ratios else None

    @property
    def violations(self) -> int:
        return sum(1 for row in self.rows if row.violates)

    @property
    def exact_rows(self) -> int:
        return sum(1 for row in self.rows if row.opt_method is OptMethod.EXACT)

    @property
    def semi_over_opt(self) -> int:
        return sum(1 for row in self.rows if row.semi_over_opt)

    @property
    def cost_identity_failures(self) -> int:
        return sum(1 for row in self.rows if row.cost_identity_failed)

    @property
    def tie_break_mismatches(self) -> int:
        return sum(1 for row in self.rows if row.tie_break_mismatch)

    @property
    def two_approx_violations(self) -> int:
        return sum(1 for row in self.rows if row.two_approx_exceeded)

    @property
    def stripped_opt_violations(self) -> int:
        return sum(1 for row in self.rows if row.stripped_opt_exceeded)

    @property
    def prefix_violations(self) -> int:
        return sum(1 for row in self.rows if row.prefix_breaks)


@dataclass(frozen=True, slots=True)
class SweepRunResult:
    report: RatioReport
    diagnostics: list[Diagnostic]
    has_errors: bool
