"""Diagnostics."""

from rentmin.diagnostics.codes import (
    CHECK_BATCH_SHAPE,
    CHECK_COST_IDENTITY,
    CHECK_DELAY_MISMATCH,
    CHECK_HALL_VIOLATION,
    CHECK_ORACLE_MISMATCH,
    CHECK_SCHEDULE_INVALID,
    CHECK_UNASSIGNED_JOB,
    FORMAT_MALFORMED_JSON,
    FORMAT_MISSING_FIELD,
    FORMAT_NON_INTEGER,
    GENERATOR_INVALID_PARAMETERS,
    GENERATOR_LARGE_GRID,
    INSTANCE_BAD_DELAY,
    INSTANCE_BAD_ID,
    INSTANCE_BAD_RENT_LENGTH,
    INSTANCE_DELAY_WINDOW,
    INSTANCE_DUPLICATE_ID,
    INSTANCE_EMPTY_WINDOW,
    INVARIANT_CHECKER_DISAGREEMENT,
    INVARIANT_ONLINE_INFEASIBLE,
    INVARIANT_ORACLE_INFEASIBLE,
    INVARIANT_TWO_APPROX_NONTERMINATING,
    ORACLE_TAU_ORDER,
    SWEEP_COST_IDENTITY,
    SWEEP_PREFIX_GROWTH,
    SWEEP_RATIO_VIOLATION,
    SWEEP_SEMI_OVER_OPT,
    SWEEP_STRIPPED_OPT_BOUND,
    SWEEP_TIE_BREAK_DEPENDENCE,
    SWEEP_TWO_APPROX_BOUND,
    DiagnosticSpec,
)
from rentmin.diagnostics.diagnostic import Diagnostic, Severity
from rentmin.diagnostics.errors import (
    InvariantBreach,
    RentminError,
    ValidationError,
)
from rentmin.diagnostics.report import (
    collect_diagnostics,
    has_errors,
    render_report,
    sort_diagnostics,
    summarize,
)

__all__ = [
    "CHECK_BATCH_SHAPE",
    "CHECK_COST_IDENTITY",
    "CHECK_DELAY_MISMATCH",
    "CHECK_HALL_VIOLATION",
    "CHECK_ORACLE_MISMATCH",
    "CHECK_SCHEDULE_INVALID",
    "CHECK_UNASSIGNED_JOB",
    "FORMAT_MALFORMED_JSON",
    "FORMAT_MISSING_FIELD",
    "FORMAT_NON_INTEGER",
    "GENERATOR_INVALID_PARAMETERS",
    "GENERATOR_LARGE_GRID",
    "INSTANCE_BAD_DELAY",
    "INSTANCE_BAD_ID",
    "INSTANCE_BAD_RENT_LENGTH",
    "INSTANCE_DELAY_WINDOW",
    "INSTANCE_DUPLICATE_ID",
    "INSTANCE_EMPTY_WINDOW",
    "INVARIANT_CHECKER_DISAGREEMENT",
    "INVARIANT_ONLINE_INFEASIBLE",
    "INVARIANT_ORACLE_INFEASIBLE",
    "INVARIANT_TWO_APPROX_NONTERMINATING",
    "ORACLE_TAU_ORDER",
    "SWEEP_COST_IDENTITY",
    "SWEEP_PREFIX_GROWTH",
    "SWEEP_RATIO_VIOLATION",
    "SWEEP_SEMI_OVER_OPT",
    "SWEEP_STRIPPED_OPT_BOUND",
    "SWEEP_TIE_BREAK_DEPENDENCE",
    "SWEEP_TWO_APPROX_BOUND",
    "Diagnostic",
    "DiagnosticSpec",
    "InvariantBreach",
    "RentminError",
    "Severity",
    "ValidationError",
    "collect_diagnostics",
    "has_errors",
    "render_report",
    "sort_diagnostics",
    "summarize",
]
