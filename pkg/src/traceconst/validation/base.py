from abc import ABC, abstractmethod
from typing import List, Any, Optional


class ValidationIssue:
    def __init__(self, message: str, severity: str = "error", code: Optional[str] = None):
        self.message = message
        self.severity = severity  # "error", "warning", "info"
        self.code = code

    def __str__(self):
        tag = f"[{self.code}] " if self.code else ""
        return f"{self.severity.upper()}: {tag}{self.message}"


class BaseValidator(ABC):
    def __init__(self):
        self.issues: List[ValidationIssue] = []

    @abstractmethod
    def validate(self, target: Any) -> bool:
        """Validate target and return True if valid"""
        pass

    def add_error(self, message: str, code: Optional[str] = None, severity: str = "error"):
        self.issues.append(ValidationIssue(message, severity, code))

    def has_errors(self) -> bool:
        return any(e.severity == "error" for e in self.issues)

    def has_warnings(self) -> bool:
        return any(e.severity == "warning" for e in self.issues)

    def get_errors(self) -> List[ValidationIssue]:
        return [e for e in self.issues if e.severity == "error"]

    def get_warnings(self) -> List[ValidationIssue]:
        return [e for e in self.issues if e.severity == "warning"]

    def error_codes(self) -> List[str]:
        return [e.code for e in self.get_errors() if e.code]

    def clear_errors(self):
        self.issues.clear()
