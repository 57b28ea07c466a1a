"""Exception types shared across the package."""


class ConfigError(ValueError):
    """Invalid scenario configuration; message carries the offending field path."""


class NumericalError(ArithmeticError):
    """A numeric contract was violated (overflow, lost bracket, out-of-range sum)."""
