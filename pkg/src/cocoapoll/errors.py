"""Exception types raised across the package."""


class CocoaPollError(Exception):
    """Base class for all package errors."""


class ValidationError(CocoaPollError, ValueError):
    """Input data violates a schema or a domain invariant.

    ``issues`` holds one human-readable line per offending row/field so that
    callers can report every problem at once rather than the first one.
    """

    def __init__(self, message, issues=None):
        self.issues = list(issues or [])
        if self.issues:
            message = message + "\n  " + "\n  ".join(self.issues)
        super().__init__(message)


class DomainError(CocoaPollError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ConfigurationError(CocoaPollError, KeyError):
    """A scenario or config file is missing something an operation needs."""

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class InfeasibleError(CocoaPollError):
    """A compensation target cannot be met even at full adoption."""

    def __init__(self, message, required_adoption, shortfall_t):
        super().__init__(message)
        self.required_adoption = required_adoption
        self.shortfall_t = shortfall_t
