"""Exception types shared across the package."""


class RegulusError(Exception):
    """Base class for every error raised deliberately by this package."""


class HypothesisViolation(RegulusError, ValueError):
    """A parameter falls outside the range a family or operation allows."""


class TruncationBudgetExceeded(RegulusError):
    """A computation would need more coefficients than the configured cap."""


class SpecParseError(RegulusError, ValueError):
    """A textual series/identity/function description could not be parsed."""
