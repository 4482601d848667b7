"""Error hierarchy shared by the library and the command line."""

# Libraries
from dataclasses import dataclass


@dataclass(frozen=True)
class Violation:
    """One failed datum invariant: a rule id, where it failed, and a readable message."""

    rule: str
    location: str
    message: str

    def __str__(self) -> str:
        return f"[{self.rule}] {self.location}: {self.message}"


class RGroupError(Exception):
    """Base class for every error raised by rgroup."""

    exit_code = 1


class SchemaError(RGroupError, ValueError):
    """The input document is not valid JSON or does not match the datum schema."""

    exit_code = 1

    def __init__(self, message: str, details: list[str] | None = None):
        super().__init__(message)
        self.details = list(details or [])

    def __str__(self) -> str:
        lines = [self.args[0]]
        lines.extend(f"- {d}" for d in self.details)
        return "\n".join(lines)


class ValidationError(RGroupError, ValueError):
    """The document parsed, but the datum breaks one or more invariants."""

    exit_code = 2

    def __init__(self, violations: list[Violation]):
        self.violations = list(violations)
        super().__init__(f"{len(self.violations)} datum invariant(s) violated")

    def __str__(self) -> str:
        lines = [self.args[0]]
        lines.extend(f"- {v}" for v in self.violations)
        return "\n".join(lines)


class InconsistencyError(RGroupError, RuntimeError):
    """A computed structure contradicts a result the computation relies on."""

    exit_code = 3

    def __init__(self, stage: str, message: str, lemma: str | None = None):
        self.stage = stage
        self.lemma = lemma
        prefix = f"{stage} ({lemma})" if lemma else stage
        super().__init__(f"{prefix}: {message}")


class UnsupportedStructureError(InconsistencyError):
    """The R-group falls outside the shapes the Mackey machinery handles."""
