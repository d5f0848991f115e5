"""Exception types shared across the engine."""


class EngineError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(EngineError, ValueError):
    """An argument is outside the domain an operation is defined on."""


class CapExceededError(EngineError):
    """A resource guard tripped (e.g. a factorial argument past the cap)."""


class CatalogError(EngineError):
    """Base class for catalog construction and I/O problems."""


class CatalogParseError(CatalogError):
    """A catalog file line could not be parsed."""

    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class CatalogValidationError(CatalogError):
    """A parsed catalog row violates a structural invariant."""


class ThresholdNotFoundError(EngineError):
    """No stabilization degree exists inside the scanned window."""
