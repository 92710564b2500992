"""Diagnostic codes and messages."""

from dataclasses import dataclass
from typing import Final, Literal

Severity = Literal["error", "warning"]


@dataclass(frozen=True, slots=True)
class DiagnosticSpec:
    code: str
    message: str
    hint: str | None = None
    severity: Severity = "error"
    category: str | None = None


INSTANCE_BAD_RENT_LENGTH: Final[DiagnosticSpec] = DiagnosticSpec(
    code="INSTANCE_BAD_RENT_LENGTH",
    message="Rent length must satisfy T ≥ 1.",
    hint="Use a positive integer for `T`.",
    category="instance",
)

INSTANCE_BAD_DELAY: Final[DiagnosticSpec] = DiagnosticSpec(
    code="INSTANCE_BAD_DELAY",
    message="Delay must satisfy lambda ≥ 0.",
    hint="Use a nonnegative integer for `lambda`.",
    category="instance",
)

INSTANCE_EMPTY_WINDOW: Final[DiagnosticSpec] = DiagnosticSpec(
    code="INSTANCE_EMPTY_WINDOW",
    message="Job window is empty: d ≥ r+1 violated.",
    hint="Every job needs at least one unit slot [t, t+1) with r ≤ t ≤ d-1.",
    category="instance",
)

INSTANCE_DELAY_WINDOW: Final[DiagnosticSpec] = DiagnosticSpec(
    code="INSTANCE_DELAY_WINDOW",
    message="Job window too small for the delay: d−r ≥ λ+1 violated.",
    hint="Widen the job window or lower `lambda`.",
    category="instance",
)

INSTANCE_DUPLICATE_ID: Final[DiagnosticSpec] = DiagnosticSpec(
    code="INSTANCE_DUPLICATE_ID",
    message="Duplicate job id.",
    hint="Job ids must be unique positive integers.",
    category="instance",
)

INSTANCE_BAD_ID: Final[DiagnosticSpec] = DiagnosticSpec(
    code="INSTANCE_BAD_ID",
    message="Job id must be a positive integer.",
    category="instance",
)

FORMAT_MALFORMED_JSON: Final[DiagnosticSpec] = DiagnosticSpec(
    code="FORMAT_MALFORMED_JSON",
    message="Input is not valid UTF-8 JSON.",
    category="format",
)

FORMAT_MISSING_FIELD: Final[DiagnosticSpec] = DiagnosticSpec(
    code="FORMAT_MISSING_FIELD",
    message="Required field is missing.",
    category="format",
)

FORMAT_NON_INTEGER: Final[DiagnosticSpec] = DiagnosticSpec(
    code="FORMAT_NON_INTEGER",
    message="Field must be an integer.",
    hint="Times, ids and parameters are plain JSON integers (no floats, no strings).",
    category="format",
)

GENERATOR_INVALID_PARAMETERS: Final[DiagnosticSpec] = DiagnosticSpec(
    code="GENERATOR_INVALID_PARAMETERS",
    message="Generator parameters cannot produce a valid instance.",
    category="generator",
)

GENERATOR_LARGE_GRID: Final[DiagnosticSpec] = DiagnosticSpec(
    code="GENERATOR_LARGE_GRID",
    message="Exhaustive grid exceeds the recommended size; brute-force OPT may be slow.",
    hint="Recommended limits are horizon ≤ 12 and max_jobs ≤ 6.",
    severity="warning",
    category="generator",
)

ORACLE_TAU_ORDER: Final[DiagnosticSpec] = DiagnosticSpec(
    code="ORACLE_TAU_ORDER",
    message="Oracle batches must arrive in non-decreasing τ order with a common τ.",
    category="oracle",
)

INVARIANT_ORACLE_INFEASIBLE: Final[DiagnosticSpec] = DiagnosticSpec(
    code="INVARIANT_ORACLE_INFEASIBLE",
    message="Semi-online rent set is infeasible after adding a 3T rent.",
    category="invariant",
)

INVARIANT_ONLINE_INFEASIBLE: Final[DiagnosticSpec] = DiagnosticSpec(
    code="INVARIANT_ONLINE_INFEASIBLE",
    message="EDF failed on the final online rent set.",
    category="invariant",
)

INVARIANT_TWO_APPROX_NONTERMINATING: Final[DiagnosticSpec] = DiagnosticSpec(
    code="INVARIANT_TWO_APPROX_NONTERMINATING",
    message="Offline 2-approximation exceeded one iteration per job.",
    category="invariant",
)

INVARIANT_CHECKER_DISAGREEMENT: Final[DiagnosticSpec] = DiagnosticSpec(
    code="INVARIANT_CHECKER_DISAGREEMENT",
    message="EDF and the Hall condition disagree on feasibility.",
    category="invariant",
)

CHECK_HALL_VIOLATION: Final[DiagnosticSpec] = DiagnosticSpec(
    code="CHECK_HALL_VIOLATION",
    message="Rent set supplies fewer active units than the jobs confined to a window.",
    category="check",
)

CHECK_COST_IDENTITY: Final[DiagnosticSpec] = DiagnosticSpec(
    code="CHECK_COST_IDENTITY",
    message="Trace totals break total_rents = 6 × total_batches.",
    category="check",
)

CHECK_ORACLE_MISMATCH: Final[DiagnosticSpec] = DiagnosticSpec(
    code="CHECK_ORACLE_MISMATCH",
    message="Trace batch count differs from the semi-online rent count.",
    category="check",
)

CHECK_BATCH_SHAPE: Final[DiagnosticSpec] = DiagnosticSpec(
    code="CHECK_BATCH_SHAPE",
    message="Step rents are not delta copies of 4×[t,t+T) + 2×[t+T,t+2T).",
    category="check",
)

CHECK_SCHEDULE_INVALID: Final[DiagnosticSpec] = DiagnosticSpec(
    code="CHECK_SCHEDULE_INVALID",
    message="Job assignment is outside its window or overloads a slot.",
    category="check",
)

CHECK_UNASSIGNED_JOB: Final[DiagnosticSpec] = DiagnosticSpec(
    code="CHECK_UNASSIGNED_JOB",
    message="Job from the instance has no assignment in the trace.",
    category="check",
)

SWEEP_RATIO_VIOLATION: Final[DiagnosticSpec] = DiagnosticSpec(
    code="SWEEP_RATIO_VIOLATION",
    message="Online cost exceeds 6(λ+1) × exact OPT.",
    category="sweep",
)

SWEEP_SEMI_OVER_OPT: Final[DiagnosticSpec] = DiagnosticSpec(
    code="SWEEP_SEMI_OVER_OPT",
    message="Semi-online rent count exceeds exact OPT.",
    category="sweep",
)

SWEEP_COST_IDENTITY: Final[DiagnosticSpec] = DiagnosticSpec(
    code="SWEEP_COST_IDENTITY",
    message="Online batches differ from the semi-online rent count.",
    category="sweep",
)

SWEEP_TIE_BREAK_DEPENDENCE: Final[DiagnosticSpec] = DiagnosticSpec(
    code="SWEEP_TIE_BREAK_DEPENDENCE",
    message="Semi-online rent count changes with the within-τ order.",
    severity="warning",
    category="sweep",
)

SWEEP_TWO_APPROX_BOUND: Final[DiagnosticSpec] = DiagnosticSpec(
    code="SWEEP_TWO_APPROX_BOUND",
    message="Offline 2-approximation exceeds 2 × exact OPT.",
    category="sweep",
)

SWEEP_STRIPPED_OPT_BOUND: Final[DiagnosticSpec] = DiagnosticSpec(
    code="SWEEP_STRIPPED_OPT_BOUND",
    message="OPT of the λ-stripped jobs exceeds (λ+1) × exact OPT.",
    category="sweep",
)

SWEEP_PREFIX_GROWTH: Final[DiagnosticSpec] = DiagnosticSpec(
    code="SWEEP_PREFIX_GROWTH",
    message="Semi-online output on a larger prefix does more than add copies of the event rent.",
    category="sweep",
)

CHECK_DELAY_MISMATCH: Final[DiagnosticSpec] = DiagnosticSpec(
    code="CHECK_DELAY_MISMATCH",
    message="Trace delay or shifted rents do not match the instance.",
    category="check",
)
