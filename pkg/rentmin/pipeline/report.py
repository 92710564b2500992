"""Ratio report writers: one CSV row per instance, JSON with an aggregate block."""

from __future__ import annotations

import csv
from fractions import Fraction
import json
from pathlib import Path
from typing import Any, Final

from rentmin.pipeline.results import RatioReport, RatioRow

REPORT_COLUMNS: Final[tuple[str, ...]] = (
    "instance_digest",
    "n",
    "T",
    "lambda",
    "online_rents",
    "semi_count",
    "opt",
    "opt_method",
    "two_approx",
    "opt_stripped",
    "prefix_breaks",
    "ratio",
)


def _optional_text(value: Fraction | int | None) -> str:
    return "" if value is None else str(value)


def row_record(row: RatioRow) -> dict[str, str | int]:
    return {
        "instance_digest": row.instance_digest,
        "n": row.n,
        "T": row.T,
        "lambda": row.lam,
        "online_rents": row.online_rents,
        "semi_count": row.semi_count,
        "opt": row.opt,
        "opt_method": str(row.opt_method),
        "two_approx": _optional_text(row.two_approx),
        "opt_stripped": _optional_text(row.opt_stripped),
        "prefix_breaks": row.prefix_breaks,
        "ratio": _optional_text(row.ratio),
    }


def aggregate_record(report: RatioReport) -> dict[str, Any]:
    return {
        "rows": len(report.rows),
        "exact_rows": report.exact_rows,
        "max_ratio": _optional_text(report.max_ratio),
        "mean_ratio": _optional_text(report.mean_ratio),
        "violations": report.violations,
        "semi_over_opt": report.semi_over_opt,
        "cost_identity_failures": report.cost_identity_failures,
        "tie_break_mismatches": report.tie_break_mismatches,
        "two_approx_violations": report.two_approx_violations,
        "stripped_opt_violations": report.stripped_opt_violations,
        "prefix_violations": report.prefix_violations,
    }


def write_report_csv(report: RatioReport, path: Path) -> None:
    with path.open("w", encoding="utf-8", newline="") as handle:
        writer = csv.DictWriter(handle, fieldnames=REPORT_COLUMNS)
        writer.writeheader()
        writer.writerows(row_record(row) for row in report.rows)


def write_report_json(report: RatioReport, path: Path) -> None:
    document = {
        "rows": [row_record(row) for row in report.rows],
        "aggregate": aggregate_record(report),
    }
    path.write_text(json.dumps(document, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")


def write_report(report: RatioReport, out_dir: Path) -> tuple[Path, Path]:
    """Write `ratios.csv` and `ratios.json` under `out_dir` (created if missing)."""
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / "ratios.csv"
    json_path = out_dir / "ratios.json"
    write_report_csv(report, csv_path)
    write_report_json(report, json_path)
    return csv_path, json_path
