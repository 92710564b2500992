"""Diagnostics core types."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from rentmin.diagnostics.codes import Severity

if TYPE_CHECKING:
    from rentmin.diagnostics.codes import DiagnosticSpec


@dataclass(frozen=True, slots=True)
class Diagnostic:
    """Structured diagnostic emitted by validators, checkers and the sweep."""

    code: str
    message: str
    severity: Severity = "error"
    hint: str | None = None
    category: str | None = None
    job_id: int | None = None

    @staticmethod
    def from_spec(
        spec: DiagnosticSpec,
        detail: str | None = None,
        *,
        job_id: int | None = None,
    ) -> Diagnostic:
        message = spec.message if detail is None else f"{spec.message} {detail}"
        return Diagnostic(
            code=spec.code,
            message=message,
            severity=spec.severity,
            hint=spec.hint,
            category=spec.category,
            job_id=job_id,
        )

    def render(self) -> str:
        where = f" (job {self.job_id})" if self.job_id is not None else ""
        text = f"{self.severity}[{self.code}]{where}: {self.message}"
        if self.hint:
            text += f"\n  hint: {self.hint}"
        return text
