"""Exception types shared across the package."""


class DomainError(ValueError):
    """An element, subkey, or string is outside its declared domain."""


class ParameterError(ValueError):
    """A parameter violates the hypotheses of a bound or a configuration cap."""


class RoundCapExceeded(ParameterError):
    """No round count within the configured cap reaches the requested target."""
