"""Exception types shared across the package.

The command line maps ValidationError to exit code 2 and NumericalError to
exit code 3; library callers catch them like any ValueError/RuntimeError.
"""


class ValidationError(ValueError):
    """Raised when an input violates a documented precondition."""


class NumericalError(RuntimeError):
    """Raised when a numerical routine cannot meet its accuracy contract."""
