"""Shared error base and parse diagnostics."""

from __future__ import annotations

from dataclasses import dataclass


class EduGraphError(Exception):
    """Base for every user/data error. The CLI maps it to exit code 1."""


@dataclass(frozen=True)
class ParseDiagnostic:
    """Position of the first syntax error. line/column are 1-based."""

    line: int
    column: int
    message: str
    token: str = ""

    def __str__(self) -> str:
        where = f"{self.line}:{self.column}"
        if self.token:
            return f"{where}: {self.message} (at {self.token!r})"
        return f"{where}: {self.message}"


class SyntaxDiagnosticError(EduGraphError):
    """Raised by the Turtle, SPARQL and mapping readers on the first error."""

    def __init__(self, diagnostic: ParseDiagnostic) -> None:
        super().__init__(str(diagnostic))
        self.diagnostic = diagnostic
