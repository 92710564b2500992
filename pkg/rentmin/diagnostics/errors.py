"""Exceptions that carry a diagnostic."""

from __future__ import annotations

from typing import Self

from rentmin.diagnostics.codes import DiagnosticSpec
from rentmin.diagnostics.diagnostic import Diagnostic


class RentminError(Exception):
    """Base error; `diagnostic` holds the structured report."""

    def __init__(self, diagnostic: Diagnostic) -> None:
        super().__init__(diagnostic.message)
        self.diagnostic = diagnostic

    def __reduce__(self) -> tuple[type[RentminError], tuple[Diagnostic]]:
        # keeps the diagnostic when errors cross process boundaries
        return (type(self), (self.diagnostic,))

    @classmethod
    def from_spec(
        cls,
        spec: DiagnosticSpec,
        detail: str | None = None,
        *,
        job_id: int | None = None,
    ) -> Self:
        return cls(Diagnostic.from_spec(spec, detail, job_id=job_id))


class ValidationError(RentminError, ValueError):
    """Input data (instance, file, generator parameters) is invalid."""


class InvariantBreach(RentminError, RuntimeError):
    """A provable invariant failed; this is always an implementation bug."""
