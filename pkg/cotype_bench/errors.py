"""Exceptions raised by the cotype-bench library."""


class CotypeBenchError(Exception):
    """Base class for all library errors."""


class DomainMismatchError(CotypeBenchError, ValueError):
    """Two objects live on different tori or codomains."""


class PreconditionError(CotypeBenchError, ValueError):
    """An operation was called outside its domain of validity."""


class ExactModeError(CotypeBenchError, ValueError):
    """Exact arithmetic was requested for a quantity that is not rational."""


class BudgetExceededError(CotypeBenchError):
    """An enumeration is larger than the configured budget."""


class ConfigError(CotypeBenchError):
    """The run configuration is invalid."""
