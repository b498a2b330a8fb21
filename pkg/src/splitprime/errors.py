"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Input fails a precondition (bad discriminant, non-prime, ...)."""


class DomainError(ValueError):
    """Analytic quantity requested outside the range where it is defined."""


class CapacityError(ValueError):
    """Requested range exceeds the configured scan or sieve limits."""


class SearchLimitError(RuntimeError):
    """No split prime was found below the search ceiling."""
