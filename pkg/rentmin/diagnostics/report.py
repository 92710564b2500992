"""Aggregation and rendering of diagnostic lists."""

from collections import Counter
from collections.abc import Iterable

from rentmin.diagnostics.diagnostic import Diagnostic

_SEVERITY_RANK = {"error": 0, "warning": 1}


def collect_diagnostics(*groups: Iterable[Diagnostic]) -> list[Diagnostic]:
    diagnostics: list[Diagnostic] = []
    for group in groups:
        diagnostics.extend(group)
    return diagnostics


def has_errors(diagnostics: Iterable[Diagnostic]) -> bool:
    return any(d.severity == "error" for d in diagnostics)


def sort_diagnostics(diagnostics: Iterable[Diagnostic]) -> list[Diagnostic]:
    """Errors before warnings, then by code and job id; stable otherwise."""
    return sorted(
        diagnostics,
        key=lambda d: (_SEVERITY_RANK[d.severity], d.code, -1 if d.job_id is None else d.job_id),
    )


def summarize(diagnostics: Iterable[Diagnostic]) -> str:
    """One-line count such as "2 errors, 1 warning"."""
    counts = Counter(d.severity for d in diagnostics)
    parts = [
        f"{counts[severity]} {severity}{'' if counts[severity] == 1 else 's'}"
        for severity in _SEVERITY_RANK
        if counts[severity]
    ]
    return ", ".join(parts) if parts else "no diagnostics"


def render_report(diagnostics: Iterable[Diagnostic]) -> str:
    ordered = sort_diagnostics(diagnostics)
    lines = [d.render() for d in ordered]
    lines.append(summarize(ordered))
    return "\n".join(lines)
