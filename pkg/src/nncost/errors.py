"""Exception hierarchy shared by the library, the CLI, and the HTTP service.

Each error carries a stable machine-readable ``code`` (used in JSON error
objects) and the process exit code the CLI maps it to: 2 for parse/schema/
validation failures, 3 for shape inference failures, 4 for missing hardware
capabilities or unresolved ids, 5 for numeric domain violations.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SourceLocation:
    line: int
    col: int = 1
    file: str | None = None

    def to_json_obj(self) -> dict:
        obj: dict = {"line": self.line, "col": self.col}
        if self.file is not None:
            obj["file"] = self.file
        return obj

    def __str__(self) -> str:
        prefix = f"{self.file}:" if self.file else ""
        return f"{prefix}{self.line}:{self.col}"


class AnalyzerError(Exception):
    """Base class for every error this package raises on purpose."""

    code = "error"
    exit_code = 1

    def __init__(self, message: str, *, location: SourceLocation | None = None):
        super().__init__(message)
        self.location = location

    def to_json_obj(self) -> dict:
        # the bare message: location is carried structurally alongside
        obj: dict = {"code": self.code, "message": Exception.__str__(self)}
        if self.location is not None:
            obj["location"] = self.location.to_json_obj()
        return obj

    def __str__(self) -> str:
        message = super().__str__()
        if self.location is not None:
            return f"{self.location}: {message}"
        return message


class SpecSyntaxError(AnalyzerError):
    """Malformed document text (bad encoding, unparseable line)."""

    code = "parse_error"
    exit_code = 2


class SpecSchemaError(AnalyzerError):
    """Well-formed text that violates the schema (unknown key, missing field)."""

    code = "schema_error"
    exit_code = 2


class SpecValidationError(AnalyzerError):
    """Schema-conformant document that breaks a value invariant (e.g. stride 0)."""

    code = "validation_error"
    exit_code = 2


class ShapeError(AnalyzerError):
    """Shape inference produced an impossible dimension."""

    code = "shape_error"
    exit_code = 3

    def __init__(self, message: str, *, layer_index: int | None = None):
        super().__init__(message)
        self.layer_index = layer_index

    def to_json_obj(self) -> dict:
        obj = super().to_json_obj()
        if self.layer_index is not None:
            obj["layer_index"] = self.layer_index
        return obj


class MissingCapability(AnalyzerError):
    """A hardware profile lacks the data a computation needs."""

    code = "missing_capability"
    exit_code = 4


class NotFound(AnalyzerError):
    """An id (hardware profile, zoo entry) did not resolve."""

    code = "not_found"
    exit_code = 4


class DomainError(AnalyzerError):
    """A numeric argument is outside its mathematical domain."""

    code = "domain_error"
    exit_code = 5
