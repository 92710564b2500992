"""Run options, result carriers, report writers and entrypoints."""

from rentmin.pipeline.entrypoints import (
    evaluate_instance,
    run_check,
    run_opt,
    run_simulate,
    run_sweep,
    simulate_document,
)
from rentmin.pipeline.options import OptAlgorithm, SweepOptions
from rentmin.pipeline.report import (
    REPORT_COLUMNS,
    aggregate_record,
    row_record,
    write_report,
    write_report_csv,
    write_report_json,
)
from rentmin.pipeline.results import (
    CheckRunResult,
    OptRunResult,
    RatioReport,
    RatioRow,
    SimulateRunResult,
    SweepRunResult,
)

__all__ = [
    "REPORT_COLUMNS",
    "CheckRunResult",
    "OptAlgorithm",
    "OptRunResult",
    "RatioReport",
    "RatioRow",
    "SimulateRunResult",
    "SweepOptions",
    "SweepRunResult",
    "aggregate_record",
    "evaluate_instance",
    "row_record",
    "run_check",
    "run_opt",
    "run_simulate",
    "run_sweep",
    "simulate_document",
    "write_report",
    "write_report_csv",
    "write_report_json",
]
